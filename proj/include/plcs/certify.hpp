#ifndef PLCS_CERTIFY_HPP
#define PLCS_CERTIFY_HPP

#include <string>
#include <vector>

#include "plcs/quadratic.hpp"
#include "plcs/scheme.hpp"

namespace plcs {

/* Inductive h1-vanishing certification: a deterministic run of the descent
   procedure, recorded step by step so that an independent replay through the
   scheme calculus reproduces every snapshot exactly. */

enum class CertMode { Strict, BestEffort };
enum class CertStatus { Success, Refused, Failed };

struct CertSnapshot {
    Int deg = 0;
    long mt = 0, mt_s = 0;
    Int deg_on_l = 0;
    long d = 0;

    bool operator==(const CertSnapshot& o) const {
        return deg == o.deg && mt == o.mt && mt_s == o.mt_s && deg_on_l == o.deg_on_l &&
               d == o.d;
    }
};

struct IneqWitness {
    std::string label;
    Quad lhs, rhs;          // the recorded comparison lhs <(=) rhs
    bool strict_less = false;
    bool ok = false;        // value at recording time; must re-evaluate identically
};

struct CertStep {
    enum Kind { Normalize, Reduce, Specialize, ExtendBlock, OrdinaryBase, EmptyBase };
    Kind kind = Normalize;

    Rat tau;                          // Normalize: shear coefficient
    unsigned seed = 0;                // Reduce: reduction seed
    std::vector<IneqWitness> witnesses;

    long node_depth = 0;              // Specialize: the moved point becomes on-L point #node_depth
    long m_node = 0;                  // Specialize: multiplicity of the moved point
    Rat g;                            // Specialize: fresh shared coefficient
    Int new_deg_on_l = 0;

    long m_prime = 0;                 // ExtendBlock bookkeeping
    std::vector<long> s_counts;       // s_j, j = 1..m'
    std::vector<long> m_primes;       // m'_j
    std::vector<unsigned> reduce_seeds;
    std::vector<long> lambda_set;     // indices j with m'_{j+1} < m'_j
    std::vector<long> n_counts;       // segment sums of the s_j between drops
    long ell = 0, ell_tilde = 0;

    CertSnapshot after;
};

struct Certificate {
    std::vector<SchemeBranch> initial;
    long d = 0;
    bool smooth_class = false;        // which of the two procedures ran
    CertMode mode = CertMode::Strict;
    CertStatus status = CertStatus::Failed;
    std::string reason;
    std::vector<CertStep> steps;
    std::vector<SchemeBranch> top;    // equivalent scheme at degree d handed to the oracle
};

/* Certification for schemes with smooth branches only (entry bound
   deg X < beta (d - mt)^2, constants in Q(sqrt 2)). */
Certificate certify_gs1(const GSScheme& x, long d, CertMode mode, unsigned seed = 1);

/* Certification for general schemes (entry bound
   deg X <= beta0 (d - mt - mt_s)^2, constants in Q(sqrt 85)). */
Certificate certify_gs(const GSScheme& x, long d, CertMode mode, unsigned seed = 1);

struct ReplayReport {
    GSScheme terminal;
    GSScheme top;
    size_t steps_checked = 0;
};

/* Re-executes every step through the scheme calculus, recomputing snapshots and
   inequality witnesses; throws ReplayMismatch at the first divergence. */
ReplayReport replay(const Certificate& c);

/* Line-delimited JSON, one header line plus one line per step; byte-stable for a
   fixed seed. */
std::string certificate_to_jsonl(const Certificate& c);
Certificate certificate_from_jsonl(const std::string& text);

} // namespace plcs

#endif
