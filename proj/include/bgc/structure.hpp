#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bgc/complex.hpp"

namespace bgc {

// N^{p,q} = ker(D01) cap ker(D2m1) inside C^{p,q}, with the induced dbar =
// D10 written in the N bases. Closed under D10 whenever the complex is valid.
struct NullSubcomplex {
    std::map<Bidegree, Subspace> bases;  // block-local subspaces of C^{p,q}
    std::map<Bidegree, QMatrix> dbar;    // N^{p,q} -> N^{p+1,q} in N coordinates

    int dim(Bidegree b) const {
        auto it = bases.find(b);
        return it == bases.end() ? 0 : it->second.dim();
    }
    const Subspace& at(const BigradedComplex& c, Bidegree b) const;
};

NullSubcomplex null_subcomplex(const BigradedComplex& c);

struct NullCohomology {
    int dim;
    Subspace cocycles;      // Z^k(N_q, dbar), block-local in C^{k-q,q}
    Subspace coboundaries;  // B^k(N_q, dbar) = dbar(N^{k-q-1,q}), same ambient
};

// Pre-cocycles and pre-coboundaries: Z^k_q = pi_q(Z^k(C,D)) and
// B^k_q = pi_q(B^k(C,D)), held as subspaces of C^k supported in G^q.
struct PreModules {
    Subspace Z;
    Subspace B;
};

// Value of the obstruction map rho_k (or its restriction varrho_k): a class
// in H^{k+1}(N_0, dbar) with a representative in C^{k+1,0} coordinates.
struct ObstructionClass {
    int degree;              // k
    Bidegree block;          // (k+1, 0)
    QVector representative;  // block-local, lies in Z^{k+1}(N_0, dbar)
    Subspace coboundaries;   // B^{k+1}(N_0, dbar), block-local

    bool is_zero() const { return coboundaries.contains(representative); }
};

// One (k,q) diagram: three B spaces, three Z spaces, the quotient dims, and
// the six exactness verdicts (two per row for the B and Z rows, the column
// inclusions, and the bottom-row dimension count).
struct DiagramReport {
    int k, q, p;
    Subspace B_corner, B_mid, B_next;  // B^k_q cap C^{p,q}, B^k_q, B^k_{q+1}
    Subspace Z_corner, Z_mid, Z_next;
    int h_corner, h_mid, h_next;

    bool row_B_kernel_matches;   // ker(pi_{q+1}|B^k_q) = B^k_q cap C^{p,q}
    bool row_B_surjects;         // pi_{q+1}(B^k_q) = B^k_{q+1}
    bool row_Z_kernel_matches;
    bool row_Z_surjects;
    bool columns_are_subspaces;  // each B space sits inside its Z space
    bool bottom_row_dims_exact;  // h_corner + h_next = h_mid

    bool all_ok() const {
        return row_B_kernel_matches && row_B_surjects && row_Z_kernel_matches && row_Z_surjects &&
               columns_are_subspaces && bottom_row_dims_exact;
    }
    std::string failure_summary() const;
};

// Shared per-complex state: null subcomplex, total cohomology per degree and
// pre-modules per (k,q), all computed once.
class StructureAnalysis {
public:
    explicit StructureAnalysis(const BigradedComplex& c);

    const BigradedComplex& complex_ref() const { return *c_; }
    const NullSubcomplex& null() const { return null_; }

    NullCohomology null_cohomology(int q, int k) const;
    // Coboundaries dbar(N^{k-q-1,q}) pushed into C^{k-q,q} coordinates.
    Subspace null_coboundaries(int q, int k) const;
    Subspace null_cocycles(int q, int k) const;

    const CohomologyResult& total_cohomology(int k);

    // Computes Z^k_q twice (projection of cocycles, and the solution-space
    // characterization through coboundaries of the null rows); throws
    // PrecocycleMismatch if the two routes ever disagree.
    const PreModules& pre_modules(int k, int q);

    Subspace a_space(int k);     // A^k inside C^k, supported in G^1
    Subspace j_space(int k);     // J^k = A^k cap C^{k-1,1}, inside C^k
    Subspace ker_rho(int k);     // computed from the defining system of rho_k
    Subspace ker_varrho(int k);  // likewise for varrho_k

    ObstructionClass rho(int k, const GradedVector& xi);
    ObstructionClass varrho(int k, const QVector& xi_block);

    DiagramReport diagram(int k, int q);
    std::vector<int> split_cohomology(int k);

private:
    Subspace g1_solution_space(int k, bool with_coboundary_condition);

    const BigradedComplex* c_;
    NullSubcomplex null_;
    std::map<int, CohomologyResult> cohomology_;
    std::map<std::pair<int, int>, PreModules> pre_;
};

// One-shot conveniences over a fresh analysis.
NullCohomology null_cohomology(const BigradedComplex& c, int q, int k);
PreModules pre_modules(const BigradedComplex& c, int k, int q);
ObstructionClass rho(const BigradedComplex& c, int k, const GradedVector& xi);
ObstructionClass varrho(const BigradedComplex& c, int k, const QVector& xi_block);
DiagramReport diagram(const BigradedComplex& c, int k, int q);
std::vector<int> split_cohomology(const BigradedComplex& c, int k);

}  // namespace bgc
