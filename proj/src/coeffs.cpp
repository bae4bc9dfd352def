#include "anibes/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "anibes/io_util.hpp"

namespace anibes {

BesovParams::BesovParams(SmoothnessVec beta, int m, double p, double q, double r)
    : beta_(std::move(beta)), m_(m), p_(p), q_(q), r_(r) {
    if (m_ < 0) throw ConfigError("spline order m must be >= 0");
    for (double v : {p_, q_, r_}) {
        if (!(v > 0.0)) throw ConfigError("p, q, r must lie in (0, inf]");
    }
}

double BesovParams::delta() const { return std::max(0.0, inv_exp(p_) - inv_exp(r_)); }

bool BesovParams::admissible(std::string* why) const {
    if (!(beta_.beta_tilde() > delta())) {
        if (why) *why = "beta_tilde <= (1/p - 1/r)_+";
        return false;
    }
    const double order_bound = std::min(static_cast<double>(m_),
                                        static_cast<double>(m_) - 1.0 + inv_exp(p_));
    if (!(beta_.beta_max() < order_bound)) {
        if (why) *why = "beta_max must be < min(m, m-1+1/p)";
        return false;
    }
    return true;
}

void BesovParams::require_admissible() const {
    std::string why;
    if (!admissible(&why)) throw ConfigError("inadmissible Besov parameters: " + why);
}

LevelGeom::LevelGeom(const SmoothnessVec& beta, int m, int k, std::uint64_t cap) : k(k) {
    const int d = beta.dim();
    e = beta.dilation_exps(k);
    lo.assign(static_cast<std::size_t>(d), -m);
    hi.resize(static_cast<std::size_t>(d));
    stride.assign(static_cast<std::size_t>(d), 0);
    count = 1;
    for (int i = 0; i < d; ++i) {
        if (e[static_cast<std::size_t>(i)] >= 62) {
            throw std::overflow_error("level geometry: dilation exponent too large");
        }
        hi[static_cast<std::size_t>(i)] = static_cast<int>(1LL << e[static_cast<std::size_t>(i)]);
        const std::uint64_t extent =
            static_cast<std::uint64_t>(hi[static_cast<std::size_t>(i)] -
                                       lo[static_cast<std::size_t>(i)]) + 1ULL;
        if (count > cap / extent) {
            throw std::overflow_error("level index set cardinality exceeds configured cap");
        }
        count *= extent;
    }
    // last dimension fastest, matching LevelIndexSet iteration
    std::uint64_t s = 1;
    for (int i = d - 1; i >= 0; --i) {
        stride[static_cast<std::size_t>(i)] = s;
        s *= static_cast<std::uint64_t>(hi[static_cast<std::size_t>(i)] -
                                        lo[static_cast<std::size_t>(i)]) + 1ULL;
    }
}

bool LevelGeom::contains(std::span<const int> j) const {
    if (static_cast<int>(j.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        if (j[static_cast<std::size_t>(i)] < lo[static_cast<std::size_t>(i)] ||
            j[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) {
            return false;
        }
    }
    return true;
}

std::uint64_t LevelGeom::encode(std::span<const int> j) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < dim(); ++i) {
        idx += static_cast<std::uint64_t>(j[static_cast<std::size_t>(i)] -
                                          lo[static_cast<std::size_t>(i)]) *
               stride[static_cast<std::size_t>(i)];
    }
    return idx;
}

std::vector<int> LevelGeom::decode(std::uint64_t idx) const {
    std::vector<int> j(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        const std::uint64_t digit = idx / stride[static_cast<std::size_t>(i)];
        const std::uint64_t extent =
            static_cast<std::uint64_t>(hi[static_cast<std::size_t>(i)] -
                                       lo[static_cast<std::size_t>(i)]) + 1ULL;
        j[static_cast<std::size_t>(i)] =
            static_cast<int>(digit % extent) + lo[static_cast<std::size_t>(i)];
    }
    return j;
}

SparseCoeffs::SparseCoeffs(BesovParams params) : params_(std::move(params)) {}

const LevelGeom& SparseCoeffs::geom(int k) const {
    auto it = geoms_.find(k);
    if (it == geoms_.end()) {
        it = geoms_.emplace(k, LevelGeom(params_.beta(), params_.m(), k)).first;
    }
    return it->second;
}

LevelGeom SparseCoeffs::make_geom(int k) const { return geom(k); }
const LevelGeom& SparseCoeffs::level_geom(int k) const { return geom(k); }

void SparseCoeffs::set(int k, std::span<const int> j, double alpha) {
    const LevelGeom& g = geom(k);
    if (!g.contains(j)) throw ConfigError("coefficient location outside J(k)");
    levels_[k][g.encode(j)] = alpha;
}

void SparseCoeffs::add(int k, std::span<const int> j, double alpha) {
    const LevelGeom& g = geom(k);
    if (!g.contains(j)) throw ConfigError("coefficient location outside J(k)");
    levels_[k][g.encode(j)] += alpha;
}

double SparseCoeffs::get(int k, std::span<const int> j) const {
    auto lit = levels_.find(k);
    if (lit == levels_.end()) return 0.0;
    const LevelGeom& g = geom(k);
    if (!g.contains(j)) return 0.0;
    auto it = lit->second.find(g.encode(j));
    return it == lit->second.end() ? 0.0 : it->second;
}

std::size_t SparseCoeffs::size() const {
    std::size_t n = 0;
    for (const auto& [k, entries] : levels_) n += entries.size();
    return n;
}

int SparseCoeffs::max_level() const {
    int mk = -1;
    for (const auto& [k, entries] : levels_) {
        if (!entries.empty()) mk = std::max(mk, k);
    }
    return mk;
}

std::vector<int> SparseCoeffs::levels() const {
    std::vector<int> ks;
    for (const auto& [k, entries] : levels_) {
        if (!entries.empty()) ks.push_back(k);
    }
    return ks;
}

const std::map<std::uint64_t, double>* SparseCoeffs::level_entries(int k) const {
    auto it = levels_.find(k);
    return it == levels_.end() ? nullptr : &it->second;
}

void SparseCoeffs::scale(double c) {
    for (auto& [k, entries] : levels_) {
        for (auto& [idx, alpha] : entries) alpha *= c;
    }
}

void SparseCoeffs::prune(double tol) {
    for (auto& [k, entries] : levels_) {
        for (auto it = entries.begin(); it != entries.end();) {
            if (std::fabs(it->second) <= tol) {
                it = entries.erase(it);
            } else {
                ++it;
            }
        }
    }
}

double SparseCoeffs::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim()) {
        throw ConfigError("evaluate: point dimension mismatch");
    }
    const int m = params_.m();
    const int d = dim();
    double total = 0.0;
    std::vector<int> j(static_cast<std::size_t>(d));
    std::vector<ActiveRange> range(static_cast<std::size_t>(d));
    for (const auto& [k, entries] : levels_) {
        if (entries.empty()) continue;
        const LevelGeom& g = geom(k);
        bool any = true;
        for (int i = 0; i < d; ++i) {
            range[static_cast<std::size_t>(i)] =
                active_locations(m, g.e[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
            if (range[static_cast<std::size_t>(i)].last < range[static_cast<std::size_t>(i)].first) {
                any = false;
                break;
            }
            j[static_cast<std::size_t>(i)] = range[static_cast<std::size_t>(i)].first;
        }
        if (!any) continue;
        // odometer over the active window
        while (true) {
            auto it = entries.find(g.encode(j));
            if (it != entries.end() && it->second != 0.0) {
                total += it->second * tensor_basis_dilated(m, g.e, j, x);
            }
            int axis = d - 1;
            while (axis >= 0 && j[static_cast<std::size_t>(axis)] ==
                                    range[static_cast<std::size_t>(axis)].last) {
                j[static_cast<std::size_t>(axis)] = range[static_cast<std::size_t>(axis)].first;
                --axis;
            }
            if (axis < 0) break;
            ++j[static_cast<std::size_t>(axis)];
        }
    }
    return total;
}

double sequence_norm(const SparseCoeffs& coeffs) {
    const BesovParams& pr = coeffs.params();
    const double p = pr.p();
    const double q = pr.q();
    const double bmin = pr.beta().beta_min();
    double q_acc = 0.0;
    double q_max = 0.0;
    for (int k : coeffs.levels()) {
        const auto* entries = coeffs.level_entries(k);
        double inner;
        if (std::isinf(p)) {
            inner = 0.0;
            for (const auto& [idx, a] : *entries) inner = std::max(inner, std::fabs(a));
        } else {
            double s = 0.0;
            for (const auto& [idx, a] : *entries) s += std::pow(std::fabs(a), p);
            inner = std::pow(s, 1.0 / p);
        }
        const double weight =
            std::exp2(static_cast<double>(k) * bmin -
                      static_cast<double>(pr.beta().level_norm(k)) * inv_exp(p));
        const double term = weight * inner;
        if (std::isinf(q)) {
            q_max = std::max(q_max, term);
        } else {
            q_acc += std::pow(term, q);
        }
    }
    return std::isinf(q) ? q_max : std::pow(q_acc, 1.0 / q);
}

std::string save_coeffs(const SparseCoeffs& coeffs) {
    const BesovParams& pr = coeffs.params();
    std::ostringstream out;
    out << "besov-coeffs v1; d=" << pr.dim() << "; m=" << pr.m() << "; beta=";
    for (int i = 0; i < pr.dim(); ++i) {
        if (i) out << ',';
        out << format_double(pr.beta().beta(i));
    }
    out << '\n';
    for (int k : coeffs.levels()) {
        const LevelGeom& g = coeffs.level_geom(k);
        for (const auto& [idx, alpha] : *coeffs.level_entries(k)) {
            out << k;
            for (int ji : g.decode(idx)) out << ' ' << ji;
            out << ' ' << format_double(alpha) << '\n';
        }
    }
    return out.str();
}

SparseCoeffs load_coeffs(const std::string& text, double p, double q, double r) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw ConfigError("besov-coeffs: empty input");
    int d = -1;
    int m = -1;
    std::vector<double> beta;
    {
        std::istringstream hs(header);
        std::string field;
        std::getline(hs, field, ';');
        if (field != "besov-coeffs v1") throw ConfigError("besov-coeffs: bad header magic");
        while (std::getline(hs, field, ';')) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) throw ConfigError("besov-coeffs: malformed header field");
            std::string key = field.substr(0, eq);
            key.erase(0, key.find_first_not_of(' '));
            const std::string value = field.substr(eq + 1);
            if (key == "d") {
                d = std::stoi(value);
            } else if (key == "m") {
                m = std::stoi(value);
            } else if (key == "beta") {
                std::istringstream bs(value);
                std::string tok;
                while (std::getline(bs, tok, ',')) beta.push_back(parse_double(tok));
            }
        }
    }
    if (d <= 0 || m < 0 || static_cast<int>(beta.size()) != d) {
        throw ConfigError("besov-coeffs: incomplete header");
    }
    SparseCoeffs coeffs(BesovParams(SmoothnessVec(beta), m, p, q, r));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int k = 0;
        ls >> k;
        std::vector<int> j(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) ls >> j[static_cast<std::size_t>(i)];
        std::string alpha_tok;
        ls >> alpha_tok;
        if (!ls) throw ConfigError("besov-coeffs: malformed entry line: " + line);
        coeffs.set(k, j, parse_double(alpha_tok));
    }
    return coeffs;
}

}  // namespace anibes
