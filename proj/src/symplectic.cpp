#include "supel/symplectic.hpp"

#include <unordered_set>

#include "supel/kernels.hpp"

namespace supel {

namespace {

constexpr std::uint64_t kEnumerationBound = 10'000'000;

using MatrixSet = std::unordered_set<FpMatrix, FpMatrix::Hash>;

MatrixSet to_set(const std::vector<FpMatrix>& v) { return MatrixSet(v.begin(), v.end()); }

void verify_closed(const std::vector<FpMatrix>& elems, const MatrixSet& set,
                   const char* label) {
    for (const FpMatrix& a : elems) {
        for (const FpMatrix& b : elems) {
            if (set.find(a * b) == set.end()) {
                throw Error(ErrorKind::NotSubgroup,
                            std::string(label) + " is not closed under multiplication");
            }
        }
    }
}

}  // namespace

SymplecticForm::SymplecticForm(unsigned g, unsigned p)
    : g_(g), p_(p), j_(2 * static_cast<std::size_t>(g), p) {
    if (g == 0) throw Error(ErrorKind::Precondition, "genus must be positive");
    for (unsigned i = 0; i < g; ++i) {
        j_.set(i, g + i, 1);
        j_.set(g + i, i, p - 1);
    }
}

bool is_symplectic(const FpMatrix& m, const SymplecticForm& form) {
    if (m.dim() != form.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix does not match form dimension");
    }
    if (m.modulus() != form.modulus()) {
        throw Error(ErrorKind::ModulusMismatch, "matrix does not match form modulus");
    }
    return kernels::symplectic_check(m.data(), form.matrix().data(), m.dim(),
                                     static_cast<std::uint8_t>(m.modulus()));
}

BigCount sp_group_order(unsigned g, unsigned p) {
    validate_modulus(p);
    if (g == 0) throw Error(ErrorKind::Precondition, "genus must be positive");
    BigCount order = BigCount::pow(p, g * g);
    for (unsigned i = 1; i <= g; ++i) {
        order *= BigCount(boost::multiprecision::pow(cpp_int(p), 2 * i) - 1);
    }
    return order;
}

std::vector<FpMatrix> enumerate_sp(unsigned g, unsigned p) {
    validate_modulus(p);
    if (g == 0) throw Error(ErrorKind::Precondition, "genus must be positive");
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    const std::size_t cells = n * n;

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= p;
        if (total > kEnumerationBound) {
            throw Error(ErrorKind::TooLarge,
                        "p^(4g^2) exceeds the exhaustive-scan bound for g=" +
                            std::to_string(g) + ", p=" + std::to_string(p));
        }
    }

    const SymplecticForm form(g, p);
    const std::uint8_t* j = form.matrix().data();

    std::vector<FpMatrix> result;
    std::vector<std::uint8_t> digits(cells, 0);
    // Odometer over all base-p digit vectors, low cell fastest.
    while (true) {
        if (kernels::symplectic_check(digits.data(), j, n, static_cast<std::uint8_t>(p))) {
            FpMatrix m(n, p);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    m.set(i, k, digits[i * n + k]);
                }
            }
            result.push_back(std::move(m));
        }
        std::size_t pos = 0;
        while (pos < cells && ++digits[pos] == p) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == cells) break;
    }
    return result;
}

BigCount left_coset_count(const std::vector<FpMatrix>& subgroup,
                          const std::vector<FpMatrix>& group) {
    if (subgroup.empty() || group.empty()) {
        throw Error(ErrorKind::NotSubgroup, "empty input set");
    }
    const MatrixSet group_set = to_set(group);
    const MatrixSet sub_set = to_set(subgroup);
    for (const FpMatrix& h : subgroup) {
        if (group_set.find(h) == group_set.end()) {
            throw Error(ErrorKind::NotSubgroup, "subgroup element outside group");
        }
    }
    verify_closed(subgroup, sub_set, "subgroup");
    verify_closed(group, group_set, "group");

    const BigCount by_lagrange =
        BigCount(group_set.size()).divide_exact(BigCount(sub_set.size()));

    // Explicit partition: sweep group elements, marking each left coset g*H.
    MatrixSet marked;
    std::uint64_t cosets = 0;
    for (const FpMatrix& g : group) {
        if (marked.find(g) != marked.end()) continue;
        ++cosets;
        for (const FpMatrix& h : subgroup) {
            marked.insert(g * h);
        }
    }
    if (BigCount(cosets) != by_lagrange) {
        throw Error(ErrorKind::VerificationFailed,
                    "coset partition disagrees with Lagrange division");
    }
    return by_lagrange;
}

}  // namespace supel
