#include "supel/branch_geometry.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "supel/fp.hpp"

namespace supel {

namespace {

void check_exponent_congruence(const std::vector<unsigned>& counts, unsigned p) {
    unsigned weighted = 0;
    for (unsigned k = 1; k < p; ++k) {
        weighted = (weighted + k * (counts[k - 1] % p)) % p;
    }
    if (weighted % p != 0) {
        throw Error(ErrorKind::InvalidVector,
                    "weighted exponent sum is not divisible by " + std::to_string(p));
    }
}

std::vector<unsigned> scaled(const std::vector<unsigned>& counts, unsigned z, unsigned p) {
    std::vector<unsigned> out(p - 1);
    for (unsigned k = 1; k < p; ++k) {
        out[k - 1] = counts[(z * k) % p - 1];
    }
    return out;
}

}  // namespace

MultiplicityVector::MultiplicityVector(std::vector<unsigned> counts, unsigned p)
    : counts_(std::move(counts)), p_(p) {
    validate_modulus(p);
    if (counts_.size() != p - 1) {
        throw Error(ErrorKind::InvalidVector,
                    "expected " + std::to_string(p - 1) + " multiplicities");
    }
    check_exponent_congruence(counts_, p);
    const unsigned max = *std::max_element(counts_.begin(), counts_.end());
    if (counts_[0] != max) {
        throw Error(ErrorKind::InvalidVector,
                    "not canonical: exponent-1 multiplicity must be maximal");
    }
}

unsigned MultiplicityVector::total() const {
    unsigned m = 0;
    for (unsigned c : counts_) m += c;
    return m;
}

unsigned MultiplicityVector::stabilizer_order() const {
    unsigned order = 0;
    for (unsigned z = 1; z < p_; ++z) {
        if (scaled(counts_, z, p_) == counts_) ++order;
    }
    return order;
}

std::string MultiplicityVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(counts_[i]);
    }
    return s + ")";
}

MultiplicityVector normalize_multiplicity_vector(const std::vector<unsigned>& raw, unsigned p) {
    validate_modulus(p);
    if (raw.size() != p - 1) {
        throw Error(ErrorKind::InvalidVector,
                    "expected " + std::to_string(p - 1) + " multiplicities");
    }
    check_exponent_congruence(raw, p);
    // Scaling by z moves entry z into the exponent-1 slot; among the scalings
    // that maximize that slot, keep the lexicographically greatest tuple.
    std::vector<unsigned> best = scaled(raw, 1, p);
    for (unsigned z = 2; z < p; ++z) {
        std::vector<unsigned> cand = scaled(raw, z, p);
        if (cand[0] > best[0] || (cand[0] == best[0] && cand > best)) {
            best = std::move(cand);
        }
    }
    return MultiplicityVector(best, p);
}

std::optional<unsigned> ramification_count(unsigned g, unsigned p) {
    validate_modulus(p);
    if (g == 0) throw Error(ErrorKind::Precondition, "genus must be positive");
    if ((2 * g) % (p - 1) != 0) return std::nullopt;
    return 2 * g / (p - 1) + 2;
}

BranchConfiguration::BranchConfiguration(std::vector<Rational> points,
                                         std::vector<unsigned> exponents, unsigned kappa,
                                         unsigned p)
    : points_(std::move(points)), exponents_(std::move(exponents)), kappa_(kappa), p_(p) {
    validate_modulus(p);
    if (points_.size() != exponents_.size()) {
        throw Error(ErrorKind::InvalidVector, "one exponent per branch point required");
    }
    if (points_.empty()) {
        throw Error(ErrorKind::InvalidVector, "at least one finite branch point required");
    }
    if (kappa_ >= p) {
        throw Error(ErrorKind::InvalidVector, "kappa must be a residue mod p");
    }
    unsigned sum = kappa_ % p;
    for (unsigned k : exponents_) {
        if (k == 0 || k >= p) {
            throw Error(ErrorKind::InvalidVector, "exponents must lie in 1..p-1");
        }
        sum = (sum + k) % p;
    }
    if (sum != 0) {
        throw Error(ErrorKind::InvalidVector,
                    "exponent sum plus kappa must be divisible by " + std::to_string(p));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i] == points_[j]) {
                throw Error(ErrorKind::DuplicatePoints,
                            "branch points must be pairwise distinct");
            }
        }
    }
}

std::string BranchConfiguration::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["kappa"] = kappa_;
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        pts.push_back({{"num", points_[i].numerator().str()},
                       {"den", points_[i].denominator().str()},
                       {"exp", exponents_[i]}});
    }
    j["points"] = std::move(pts);
    return j.dump();
}

BranchConfiguration BranchConfiguration::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Rational> points;
    std::vector<unsigned> exponents;
    for (const auto& pt : j.at("points")) {
        points.emplace_back(cpp_int(pt.at("num").get<std::string>()),
                            cpp_int(pt.at("den").get<std::string>()));
        exponents.push_back(pt.at("exp").get<unsigned>());
    }
    return BranchConfiguration(std::move(points), std::move(exponents),
                               j.at("kappa").get<unsigned>(), j.at("p").get<unsigned>());
}

BranchConfiguration affine_model(const std::vector<Rational>& points,
                                 const MultiplicityVector& m) {
    if (points.size() != m.total()) {
        throw Error(ErrorKind::InvalidVector,
                    "support size must equal the multiplicity total");
    }
    const unsigned p = m.p();
    std::vector<unsigned> exponents;
    exponents.reserve(points.size());
    unsigned sum = 0;
    for (unsigned k = 1; k < p; ++k) {
        for (unsigned i = 0; i < m.count_for_exponent(k); ++i) {
            exponents.push_back(k);
            sum = (sum + k) % p;
        }
    }
    const unsigned kappa = (p - sum) % p;
    return BranchConfiguration(points, std::move(exponents), kappa, p);
}

unsigned genus_of(const BranchConfiguration& config) {
    const unsigned m = config.total_branch_count();
    if (m < 3) throw Error(ErrorKind::Precondition, "need at least three branch points");
    return (config.p() - 1) * (m - 2) / 2;
}

Perm MonodromyDatum::composite() const {
    if (cycles_.empty()) throw Error(ErrorKind::Precondition, "no cycles");
    Perm acc = cycles_.front();
    for (std::size_t i = 1; i < cycles_.size(); ++i) {
        acc = acc * cycles_[i];
    }
    return acc;
}

MonodromyDatum monodromy_cycles(const BranchConfiguration& config) {
    const unsigned p = config.p();
    std::vector<Perm> cycles;
    auto shift = [p](unsigned k) {
        std::vector<std::uint32_t> img(p);
        for (unsigned n = 0; n < p; ++n) img[n] = (n + k) % p;
        return Perm::from_images(std::move(img));
    };
    for (unsigned k : config.exponents()) cycles.push_back(shift(k));
    if (config.kappa() != 0) cycles.push_back(shift(config.kappa()));
    return MonodromyDatum(std::move(cycles));
}

}  // namespace supel
