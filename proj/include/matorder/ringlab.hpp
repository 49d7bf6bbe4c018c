#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace matorder::ringlab {

/// Table-driven finite unital ring. Elements are indices into the addition
/// and multiplication tables; ring axioms are checked on construction (full
/// triple loops up to size 64, deterministic sampling above).
class FiniteRing {
public:
    static FiniteRing matrix_ring(int k, std::uint64_t p);           // M_k(GF(p))
    static FiniteRing modular(std::uint64_t n);                      // Z_n
    static FiniteRing upper_triangular(int k, std::uint64_t p);      // UT_k(GF(p))
    static FiniteRing direct_sum(const FiniteRing& a, const FiniteRing& b);
    static FiniteRing from_tables(std::string description, int size,
                                  std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul,
                                  int zero, int one);
    /// Textual ring spec: m<k>gf<p>, z<n>, ut<k>gf<p>, or a '+'-joined direct sum.
    static FiniteRing parse(const std::string& spec);

    int size() const { return size_; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    const std::string& description() const { return desc_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    bool is_idempotent(int a) const { return mul(a, a) == a; }
    bool is_regular(int a) const;
    /// Additive order of 1.
    int characteristic() const;
    bool is_semiprime() const; // a A a = 0 implies a = 0
    bool is_prime() const;     // a A b = 0 implies a = 0 or b = 0
    std::optional<int> two_sided_inverse(int a) const;
    bool left_invertible(int a) const;
    bool right_invertible(int a) const;

    /// Decoding support for matrix rings (entries of element `a`, row-major).
    bool is_matrix_ring() const { return mat_k_ > 0; }
    int matrix_dim() const { return mat_k_; }
    std::uint64_t matrix_modulus() const { return mat_p_; }
    std::vector<int> decode_matrix(int a) const;
    int encode_matrix(const std::vector<int>& entries) const;
    int matrix_rank(int a) const;

    bool is_direct_sum() const { return static_cast<bool>(sum_parts_); }

private:
    FiniteRing() = default;
    void finalize_and_validate();
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
    }

    int size_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_;
    int zero_ = 0, one_ = 0;
    std::string desc_;
    int mat_k_ = 0;
    std::uint64_t mat_p_ = 0;
    std::shared_ptr<std::pair<FiniteRing, FiniteRing>> sum_parts_;
};

/// Subset of ring elements, bit-mapped by index.
struct ElementSet {
    const FiniteRing* ring = nullptr;
    std::vector<bool> members;

    explicit ElementSet(const FiniteRing& r) : ring(&r), members(static_cast<std::size_t>(r.size()), false) {}

    bool contains(int a) const { return members[static_cast<std::size_t>(a)]; }
    void insert(int a) { members[static_cast<std::size_t>(a)] = true; }
    int count() const;
    bool subset_of(const ElementSet& o) const;
    bool intersects(const ElementSet& o) const;
    std::vector<int> elements() const;
};

ElementSet regular_set(const FiniteRing& r);
ElementSet idempotent_set(const FiniteRing& r);
ElementSet g1_set(const FiniteRing& r, int a);   // {x : a x a = a}
ElementSet d1_set(const FiniteRing& r, int a);   // {x : a x a = 0}
ElementSet ann_l(const FiniteRing& r, int a);    // {x : x a = 0}
ElementSet ann_r(const FiniteRing& r, int a);    // {x : a x = 0}
ElementSet left_ideal_gen(const FiniteRing& r, int a);   // A a
ElementSet right_ideal_gen(const FiniteRing& r, int a);  // a A

/// Idempotent-pair witness for the annihilator definition of the minus order.
struct DefWitness {
    int p, q;
};

/// a <=- b per the annihilator definition: idempotents p, q with
/// ann_l(a) = ann_l(p), ann_r(a) = ann_r(q), pa = pb, aq = bq. Exhaustive
/// scan over idempotent pairs in index order; the first witness is returned.
std::optional<DefWitness> minus_leq_def(const FiniteRing& r, int a, int b);

/// a <=- b per the inner-inverse characterization (requires a regular):
/// some a- in G1(a) with a- a = a- b and a a- = b a-. Returns the witness.
std::optional<int> minus_leq_inner(const FiniteRing& r, int a, int b);

/// a <=s b: a A inside b A and A a inside A b.
bool space_leq_def(const FiniteRing& r, int a, int b);

enum class VerifyStatus { Verified, Skipped, Counterexample, Exploratory };

const char* to_string(VerifyStatus s);

struct VerifyReport {
    std::string prop_id;
    std::string ring;
    VerifyStatus status = VerifyStatus::Skipped;
    std::string detail; // counterexample, skip reason, or exploratory findings
    std::string notes;  // e.g. scalar-domain caveats
};

/// Registered proposition identifiers, in run order for "all".
const std::vector<std::string>& registered_props();

/// Exhaustively check one registered proposition on a ring. Hypothesis
/// failures yield Skipped, except for checkers that support unasserted
/// exploration (2.4 on non-semiprime rings, 2.14 on direct sums), which run
/// anyway and report Exploratory findings.
VerifyReport verify(const std::string& prop_id, const FiniteRing& ring);

std::vector<VerifyReport> verify_all(const FiniteRing& ring);

} // namespace matorder::ringlab
