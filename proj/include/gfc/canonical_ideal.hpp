#pragma once

#include "gfc/curve.hpp"
#include "gfc/field.hpp"
#include "gfc/group.hpp"
#include "gfc/index_sets.hpp"
#include "gfc/linalg.hpp"
#include "gfc/params.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace gfc {

// Monomial z_{t_1} ... z_{t_d} of S = Sym(V_1); factors are sorted ascending.
struct MonomialKey {
    std::vector<IndexTuple> factors;

    static MonomialKey make(std::vector<IndexTuple> factors);
    std::size_t degree() const { return factors.size(); }
    IndexTuple index_sum() const;

    // Plain lexicographic comparison of the factor sequences (container order,
    // not the term order).
    auto operator<=>(const MonomialKey&) const = default;
    bool operator==(const MonomialKey&) const = default;
};

std::string to_string(const MonomialKey& m);

// The term order: smaller degree first; then larger sum of r first; then
// smaller sum of a_2, of a_3, ...; ties broken lexicographically on the sorted
// factor sequences with variables ordered by (r, a_2, ..., a_n).
std::strong_ordering compare_monomials(const MonomialKey& lhs, const MonomialKey& rhs);

struct TermOrderLess {
    bool operator()(const MonomialKey& lhs, const MonomialKey& rhs) const { return compare_monomials(lhs, rhs) < 0; }
};

enum class RelationKind { Binomial, Trinomial };

// Coefficients are integer representatives, read modulo p.
struct Term {
    std::int64_t coeff = 0;
    MonomialKey monomial;
    bool operator==(const Term&) const = default;
};

struct Relation {
    RelationKind kind = RelationKind::Binomial;
    int index = 0; // relation index i (1..n-1) for trinomials
    std::vector<Term> terms;

    IndexTuple index_sum() const { return terms.at(0).monomial.index_sum(); }
    const MonomialKey& initial_term() const;
    bool operator==(const Relation&) const = default;
};

// Degree-2 monomials of S together with their index-sum fibres over I1+I1.
class DegreeTwoSpace {
public:
    DegreeTwoSpace(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<IndexTuple>& variables() const { return variables_; }
    const std::vector<MonomialKey>& monomials() const { return monomials_; }
    const std::vector<IndexTuple>& points() const { return points_; }

    std::size_t monomial_index(const MonomialKey& m) const;
    const std::vector<std::size_t>& fiber(const IndexTuple& t) const;
    const MonomialKey& tau(const IndexTuple& t) const;
    bool contains_point(const IndexTuple& t) const { return fibers_.count(t) > 0; }

private:
    int k_, n_;
    std::vector<IndexTuple> variables_;
    std::vector<MonomialKey> monomials_;
    std::map<MonomialKey, std::size_t> index_;
    std::vector<IndexTuple> points_;
    std::map<IndexTuple, std::vector<std::size_t>> fibers_;
    std::map<IndexTuple, MonomialKey> tau_;
};

// Minimal degree-2 monomial over t, found by scanning every split t = t1 + t2.
MonomialKey tau(int k, int n, const IndexTuple& t);

std::vector<Relation> generate_binomials(const DegreeTwoSpace& space);
std::vector<Relation> generate_binomials(int k, int n);
std::vector<Relation> generate_trinomials(const CurveParams& params, const DegreeTwoSpace& space);
std::vector<Relation> generate_trinomials(const CurveParams& params);

// theta^(2)_t as a combination of basis indices in I^(2), rewriting with
// theta_{r,a} = -lambda_j theta_{r,a+k e_j} - theta_{r+k,a+k e_j}.
std::map<IndexTuple, Elem> reduce_to_basis(const CurveParams& params, const IndexTuple& t);

struct Phi2Matrix {
    std::vector<IndexTuple> rows;     // I^(2)
    std::vector<MonomialKey> cols;    // degree-2 monomials
    std::vector<SparseVec> columns;   // column j over row indices

    DenseMatrix dense() const;
    std::size_t rank(const PrimeField& F) const;
};

Phi2Matrix phi2_matrix(const CurveParams& params, const DegreeTwoSpace& space);
Phi2Matrix phi2_matrix(const CurveParams& params);

// phi_2 applied to a relation, as a vector over the rows of `matrix`.
SparseVec apply_phi2(const PrimeField& F, const Phi2Matrix& matrix, const DegreeTwoSpace& space, const Relation& rel);

// Relation as a vector over the monomial indices of `space`.
SparseVec relation_vector(const PrimeField& F, const DegreeTwoSpace& space, const Relation& rel);

// sum_terms coeff * prod_factors theta^(1)_factor(pt)
Elem evaluate_relation(const PrimeField& F, const AffinePoint& pt, const Relation& rel);

struct Degree2Report {
    int k = 0;
    int n = 0;
    Elem p = 0;
    Elem evaluation_prime = 0;
    bool plane_quintic_warning = false;

    std::size_t dim_S2 = 0;
    std::size_t num_index_points = 0; // |I1 + I1|
    std::size_t num_binomials = 0;
    std::size_t num_trinomials = 0;
    std::size_t d2 = 0;
    std::size_t phi2_rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t span_rank = 0;
    std::size_t quotient_dim = 0;           // dim S_2 - span_rank
    std::size_t standard_monomial_count = 0; // |T^2 \ in(G)|
    std::size_t points_evaluated = 0;

    bool tau_injective = false;
    bool generators_in_kernel_symbolic = false;   // (a)
    bool generators_vanish_at_points = false;     // (a), evaluation route
    bool span_equals_kernel = false;              // (b)
    bool standard_count_matches = false;          // (c)
    bool trinomial_initial_terms_ok = false;      // (d)

    std::map<CharacterLabel, std::size_t> per_character;

    // phi_2 surjective, generators in the kernel both ways and rank(span G_2) = dim ker phi_2
    bool kernel_generated() const;
    bool passed() const;
    std::vector<std::string> failures() const;
};

Degree2Report verify_degree2_kernel(const CurveParams& params, std::size_t eval_points = 50);

// Rank of each block of generators sharing a character label.
std::map<CharacterLabel, std::size_t> per_character_span_dims(const CurveParams& params);
std::map<CharacterLabel, std::size_t> per_character_span_dims(const DegreeTwoSpace& space, const std::vector<Relation>& generators,
                                                              const PrimeField& F);

std::string variable_name(const IndexTuple& t);

enum class ExportFormat { Json, CasText };
ExportFormat parse_export_format(const std::string& s);

std::string export_ideal(const CurveParams& params, ExportFormat format);

struct ExportedIdeal {
    int k = 0;
    int n = 0;
    Elem p = 0;
    std::vector<Elem> lambda;
    std::vector<IndexTuple> variables;
    std::vector<Relation> binomials;
    std::vector<Relation> trinomials;
};

ExportedIdeal parse_ideal_json(const std::string& text);

} // namespace gfc
