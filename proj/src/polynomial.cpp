#include "birweyl/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace birweyl {

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (auto e : exps_)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] -= other.exps_[i];
        if (out.exps_[i] < 0) return std::nullopt;
    }
    return out;
}

Monomial Monomial::componentwise_min(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        if (b.exps_[i] < out.exps_[i]) out.exps_[i] = b.exps_[i];
    return out;
}

Monomial Monomial::componentwise_max(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i)
        if (b.exps_[i] > out.exps_[i]) out.exps_[i] = b.exps_[i];
    return out;
}

int grlex_compare(int lambda_count, const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    int n = a.nvars();
    // Generator variables outrank lambdas in the lexicographic tie-break.
    for (int id = lambda_count; id < n; ++id)
        if (a.exp(id) != b.exp(id)) return a.exp(id) < b.exp(id) ? -1 : 1;
    for (int id = 0; id < lambda_count; ++id)
        if (a.exp(id) != b.exp(id)) return a.exp(id) < b.exp(id) ? -1 : 1;
    return 0;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(lambda_count, a, b) > 0;
}

Polynomial::Polynomial(VariableTablePtr table)
    : table_(std::move(table)), terms_(GrlexDescending{table_->lambda_count()}) {}

Polynomial Polynomial::zero(VariableTablePtr table) { return Polynomial(std::move(table)); }

Polynomial Polynomial::constant(VariableTablePtr table, const Rational& c) {
    Polynomial p(std::move(table));
    if (c != 0) p.terms_.emplace(Monomial(p.table_->size()), c);
    return p;
}

Polynomial Polynomial::variable(VariableTablePtr table, int var_id) {
    Polynomial p(std::move(table));
    Monomial m(p.table_->size());
    m.set_exp(var_id, 1);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(VariableTablePtr table, Monomial m, const Rational& c) {
    Polynomial p(std::move(table));
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           terms_.begin()->second == 1;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal degree under the graded order.
    return terms_.begin()->first.degree();
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void require_same_table(const Polynomial& a, const Polynomial& b) {
    if (!same_table(a.table(), b.table()))
        throw std::invalid_argument("polynomials over mismatched variable tables");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_table(*this, other);
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_same_table(*this, other);
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero(table_);
    Polynomial out = *this;
    for (auto& [m, k] : out.terms_) k *= c;
    return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial out(table_);
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mm.times(m), c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_table(*this, other);
    Polynomial out(table_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::domain_error("negative polynomial power");
    Polynomial out = constant(table_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) out = out * base;
        base = (k >>= 1) ? base * base : base;
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_table(table_, other.table_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& q) const {
    require_same_table(*this, q);
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(table_);
    const Monomial& qlm = q.leading_monomial();
    const Rational& qlc = q.leading_coeff();
    while (!rem.is_zero()) {
        auto m = rem.leading_monomial().divided_by(qlm);
        if (!m) return std::nullopt;  // that term can never be cancelled
        Rational c = rem.leading_coeff() / qlc;
        quot.add_term(*m, c);
        for (const auto& [qm, qc] : q.terms()) rem.add_term(qm.times(*m), -(qc * c));
    }
    return quot;
}

Polynomial Polynomial::derivative(int var_id) const {
    Polynomial out(table_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var_id);
        if (e == 0) continue;
        Monomial d = m;
        d.set_exp(var_id, e - 1);
        out.add_term(d, c * e);
    }
    return out;
}

Monomial Polynomial::common_monomial() const {
    if (terms_.empty()) throw std::domain_error("common monomial of zero polynomial");
    Monomial out = terms_.begin()->first;
    for (const auto& [m, c] : terms_) out = Monomial::componentwise_min(out, m);
    return out;
}

namespace {

// --- exact product comparison -------------------------------------------

// Verified primes just below 2^62.
constexpr std::uint64_t kPrimes[] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL, 4611686018427387701ULL,
    4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387587ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Open-addressing accumulator keyed by packed exponent vectors.
class ResidueTable {
public:
    explicit ResidueTable(std::size_t expected) {
        expected = std::min<std::size_t>(expected, 1u << 21);  // grow() takes it from there
        std::size_t cap = 64;
        while (cap < expected * 2) cap <<= 1;
        keys_.assign(cap, kEmpty);
        values_.assign(cap, 0);
    }

    void add(std::uint64_t key, std::uint64_t value, std::uint64_t p) {
        if ((used_ + 1) * 10 > keys_.size() * 7) grow(p);
        used_ += insert(key, value, p);
    }

    bool all_zero() const {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty && values_[i] != 0) return false;
        return true;
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> export_nonzero() const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        out.reserve(used_);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty && values_[i] != 0) out.emplace_back(keys_[i], values_[i]);
        return out;
    }

private:
    static constexpr std::uint64_t kEmpty = ~0ULL;

    // Returns 1 when a fresh slot was taken.
    std::size_t insert(std::uint64_t key, std::uint64_t value, std::uint64_t p) {
        std::size_t mask = keys_.size() - 1;
        std::size_t i = (key * 0x9e3779b97f4a7c15ULL) & mask;
        for (;; i = (i + 1) & mask) {
            if (keys_[i] == kEmpty) {
                keys_[i] = key;
                values_[i] = value;
                return 1;
            }
            if (keys_[i] == key) {
                values_[i] = values_[i] + value >= p ? values_[i] + value - p
                                                     : values_[i] + value;
                return 0;
            }
        }
    }

    void grow(std::uint64_t p) {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<std::uint64_t> old_values = std::move(values_);
        keys_.assign(old_keys.size() * 2, kEmpty);
        values_.assign(old_keys.size() * 2, 0);
        for (std::size_t i = 0; i < old_keys.size(); ++i)
            if (old_keys[i] != kEmpty) insert(old_keys[i], old_values[i], p);
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint64_t> values_;
    std::size_t used_ = 0;
};

std::uint64_t residue_of(const Rational& c, std::uint64_t p) {
    // Coefficients are integers here (normalized pairs); tolerate rationals
    // anyway by dividing the residues.
    std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    if (c.get_den() == 1) return num;
    std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    // den^(p-2) mod p
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return mulmod(num, inv, p);
}

struct Packing {
    std::vector<int> bits;  // per variable
    bool ok = false;
};

using Factors = std::vector<const Polynomial*>;

// Per-variable exponent bound of a product = sum of factor maxima.
Packing make_packing(int nvars, const Factors& a, const Factors& b) {
    auto side_bounds = [nvars](const Factors& side) {
        std::vector<int> total(static_cast<std::size_t>(nvars), 0);
        std::vector<int> one(total);
        for (const Polynomial* f : side) {
            std::fill(one.begin(), one.end(), 0);
            for (const auto& [m, c] : f->terms())
                for (int v = 0; v < nvars; ++v)
                    one[static_cast<std::size_t>(v)] =
                        std::max(one[static_cast<std::size_t>(v)], m.exp(v));
            for (int v = 0; v < nvars; ++v) total[static_cast<std::size_t>(v)] += one[static_cast<std::size_t>(v)];
        }
        return total;
    };
    auto max_a = side_bounds(a);
    auto max_b = side_bounds(b);
    Packing packing;
    packing.bits.resize(static_cast<std::size_t>(nvars));
    int total = 0;
    for (int v = 0; v < nvars; ++v) {
        int bound =
            std::max(max_a[static_cast<std::size_t>(v)], max_b[static_cast<std::size_t>(v)]);
        int bits = 1;
        while ((1 << bits) <= bound) ++bits;
        packing.bits[static_cast<std::size_t>(v)] = bits;
        total += bits;
    }
    packing.ok = total <= 64;
    return packing;
}

std::uint64_t pack_monomial(const Packing& packing, const Monomial& m) {
    std::uint64_t key = 0;
    for (int v = 0; v < m.nvars(); ++v) {
        key <<= packing.bits[static_cast<std::size_t>(v)];
        key |= static_cast<std::uint64_t>(m.exp(v));
    }
    return key;
}

// Bits needed for the largest absolute coefficient.
std::size_t coeff_bits(const Polynomial& p) {
    std::size_t best = 1;
    for (const auto& [m, c] : p.terms()) {
        std::size_t bits = mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
                           mpz_sizeinbase(c.get_den().get_mpz_t(), 2);
        best = std::max(best, bits);
    }
    return best;
}

std::size_t side_bound_bits(const Factors& side) {
    // |coeff of product| <= prod(max |c_i|) * (collapse multiplicity), where
    // the multiplicity is at most the product of all but the largest factor's
    // term counts.
    std::size_t bits = 1;
    std::size_t largest = 0, largest_terms = 0;
    for (std::size_t i = 0; i < side.size(); ++i)
        if (static_cast<std::size_t>(side[i]->term_count()) > largest_terms) {
            largest_terms = static_cast<std::size_t>(side[i]->term_count());
            largest = i;
        }
    for (std::size_t i = 0; i < side.size(); ++i) {
        bits += coeff_bits(*side[i]);
        if (i != largest)
            bits += std::bit_width(static_cast<std::uint64_t>(side[i]->term_count()));
    }
    return bits;
}

using ResidueTerms = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// Expands a product of factors into packed (monomial key, residue) pairs.
ResidueTerms expand_residues(const Factors& side, const Packing& packing, std::uint64_t p) {
    Factors order = side;
    std::sort(order.begin(), order.end(), [](const Polynomial* x, const Polynomial* y) {
        return x->term_count() < y->term_count();
    });
    ResidueTerms acc{{0, 1}};
    for (const Polynomial* f : order) {
        ResidueTerms ff;
        ff.reserve(static_cast<std::size_t>(f->term_count()));
        for (const auto& [m, c] : f->terms()) {
            std::uint64_t r = residue_of(c, p);
            if (r) ff.emplace_back(pack_monomial(packing, m), r);
        }
        ResidueTable table(acc.size() * ff.size() + 16);
        for (const auto& [ak, ac] : acc)
            for (const auto& [fk, fc] : ff) table.add(ak + fk, mulmod(ac, fc, p), p);
        acc = table.export_nonzero();
    }
    return acc;
}

// nullopt when the coefficient bound exceeds what the fixed prime set can
// certify; otherwise the exact verdict.
std::optional<bool> products_equal_modular(const Factors& a, const Factors& b,
                                           const Packing& packing) {
    std::size_t bound_bits = std::max(side_bound_bits(a), side_bound_bits(b)) + 2;
    std::size_t needed = (bound_bits + 60) / 61;
    if (needed > std::size(kPrimes)) return std::nullopt;
    for (std::size_t k = 0; k < needed; ++k) {
        std::uint64_t p = kPrimes[k];
        ResidueTerms lhs = expand_residues(a, packing, p);
        ResidueTerms rhs = expand_residues(b, packing, p);
        ResidueTable table(lhs.size() + rhs.size() + 16);
        for (const auto& [key, r] : lhs) table.add(key, r, p);
        for (const auto& [key, r] : rhs) table.add(key, r ? p - r : 0, p);
        if (!table.all_zero()) return false;  // a nonzero residue is a proof
    }
    return true;
}

}  // namespace

bool products_equal(const Factors& a, const Factors& b) {
    if (a.empty() && b.empty()) return true;
    const Polynomial* any = a.empty() ? b.front() : a.front();
    for (const Polynomial* f : a) require_same_table(*any, *f);
    for (const Polynomial* f : b) require_same_table(*any, *f);

    bool lhs_zero = false, rhs_zero = false;
    for (const Polynomial* f : a) lhs_zero |= f->is_zero();
    for (const Polynomial* f : b) rhs_zero |= f->is_zero();
    if (lhs_zero || rhs_zero) return lhs_zero == rhs_zero;

    // Leading monomials multiply without cancellation (the ring is a domain).
    Monomial lma(any->table()->size()), lmb(lma);
    for (const Polynomial* f : a) lma = lma.times(f->leading_monomial());
    for (const Polynomial* f : b) lmb = lmb.times(f->leading_monomial());
    if (!(lma == lmb)) return false;

    Packing packing = make_packing(any->table()->size(), a, b);
    if (packing.ok) {
        if (auto verdict = products_equal_modular(a, b, packing)) return *verdict;
    }
    // Exact fallback: unpackable exponent ranges or oversized coefficients.
    Polynomial lhs = Polynomial::constant(any->table(), 1);
    Polynomial rhs = lhs;
    for (const Polynomial* f : a) lhs = lhs * *f;
    for (const Polynomial* f : b) rhs = rhs * *f;
    return lhs == rhs;
}

namespace {

void append_monomial(std::ostringstream& os, const VariableTable& table, const Monomial& m) {
    bool first = true;
    for (int id = 0; id < m.nvars(); ++id) {
        int e = m.exp(id);
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << table.name(id);
        if (e != 1) os << '^' << e;
    }
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << rational_to_string(a);
        } else {
            if (a != 1) os << rational_to_string(a) << '*';
            append_monomial(os, *table_, m);
        }
    }
    return os.str();
}

}  // namespace birweyl
