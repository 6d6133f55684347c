#pragma once
#include "wreath/wreath_product.hpp"

namespace wreath {

/// Exact sequence data A -> C -> B: an algebra C, an ideal A spanned by
/// given vectors, the quotient B on complementary coordinates, and the
/// projection p with kernel exactly the ideal.
class Extension {
public:
    /// Throws unless the vectors are independent and span an ideal.
    Extension(LieAlgebra c, std::vector<Vec> ideal_basis);

    const LieAlgebra& algebra_c() const { return c_; }
    const LieAlgebra& algebra_a() const { return a_; }
    const LieAlgebra& algebra_b() const { return b_; }
    const std::vector<Vec>& ideal_basis() const { return ideal_basis_; }
    const Mat& projection() const { return p_; }       // C -> B
    const Mat& inclusion() const { return incl_; }     // A -> C, columns = ideal basis
    const std::vector<std::size_t>& kept_coords() const { return kept_coords_; }

    /// Coordinates of v in the ideal basis; nullopt when v is outside the ideal.
    std::optional<Vec> ideal_coords(const Vec& v) const;

private:
    LieAlgebra c_;
    std::vector<Vec> ideal_basis_;
    LieAlgebra a_;
    LieAlgebra b_;
    Mat p_;
    Mat incl_;
    std::vector<std::size_t> kept_coords_;
};

Extension make_extension(LieAlgebra c, std::vector<Vec> ideal_basis);

/// Linear right inverse of the projection: p . s = id_B, checked exactly on
/// construction.
struct Section {
    Mat s; // B -> C
};

/// The coordinate section: each quotient basis vector maps to the matching
/// coordinate vector of C.
Section default_section(const Extension& ext);

/// Wraps a user-supplied matrix, rejecting it unless p . s = id_B.
Section make_section(const Extension& ext, Mat s);

/// Degree-m component of the representation of c, as a map B -> A in the
/// quotient variable y with z = s(y):
///   h_{c,m} = (ad z)^m(c)/m! - sum_{n+r=m} t_r/(n+1)! (ad z)^n (s.p) (ad z)^r (c).
/// The value provably lies in the ideal (checked on every monomial; escape is
/// an internal error) and is returned in A-coordinates.
HomogeneousMap kk_component(const Extension& ext, const Section& s, const Vec& c, unsigned m);

/// The wreath element (h_c, p(c)) over W(A, B) with the series certified
/// through degree N.
WreathElement kk_embed(const Extension& ext, const Section& s, const Vec& c, unsigned N);

struct KKReport {
    unsigned order = 0;
    unsigned checked_degree = 0;
    bool homomorphism_ok = false;
    bool injectivity_ok = false;
    std::size_t rank = 0;
    std::size_t expected_rank = 0;
    std::vector<std::string> discrepancies;
    bool passed() const { return homomorphism_ok && injectivity_ok; }
};

/// Checks that kk_embed is an injective homomorphism into W(A, B):
/// wreath_bracket(f(c), f(c')) = f([c,c']) on all basis pairs and `trials`
/// random rational pairs, through degree N-1; injectivity via the exact rank
/// of c -> (h_{c,0}, p(c)). Requires N >= 2.
KKReport verify_kk(const Extension& ext, const Section& s, unsigned N, unsigned trials,
                   std::uint64_t seed = 0);

} // namespace wreath
