#include "mtasep/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mtasep/correlations.hpp"
#include "mtasep/error.hpp"
#include "mtasep/rng.hpp"

namespace mtasep::limits {

namespace {

std::vector<double> normalized(const std::vector<Rational>& v) {
    double norm = 0.0;
    for (const auto& c : v) norm += c.toDouble() * c.toDouble();
    norm = std::sqrt(norm);
    std::vector<double> out;
    for (const auto& c : v) out.push_back(norm > 0 ? c.toDouble() / norm : 0.0);
    return out;
}

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - b * floorDiv(a, b); }

// Boundary steps as a Maya window: beads s_k = rows[k-1] - k.
struct MayaWindow {
    std::int64_t first = 0;
    std::vector<bool> bead;
};

MayaWindow mayaOf(const CorePartition& p) {
    MayaWindow w;
    const auto r = static_cast<std::int64_t>(p.rows.size());
    const std::int64_t top = p.rows.empty() ? 0 : p.rows.front();
    w.first = -r;
    w.bead.assign(static_cast<std::size_t>(top + r), false);
    for (std::int64_t k = 1; k <= r; ++k) {
        w.bead[static_cast<std::size_t>(p.rows[static_cast<std::size_t>(k - 1)] - k - w.first)] = true;
    }
    return w;
}

std::vector<Point> walk(std::int64_t first, const std::vector<bool>& bead) {
    // Charge zero: the window starts on the y-axis at height -first.
    std::vector<Point> out;
    double x = 0.0;
    double y = static_cast<double>(-first);
    out.push_back({x, y});
    for (std::size_t k = 0; k < bead.size(); ++k) {
        if (bead[k]) y -= 1.0;
        else x += 1.0;
        const bool turn = k + 1 == bead.size() || bead[k + 1] != bead[k];
        if (turn) out.push_back({x, y});
    }
    return out;
}

struct Diagonal {
    std::vector<double> u;
    std::vector<double> v;
};

Diagonal diagonalForm(const std::vector<Point>& curve) {
    Diagonal d;
    for (const auto& p : curve) {
        const double u = p.x - p.y;
        if (!d.u.empty() && u <= d.u.back()) {
            if (u == d.u.back() && p.x + p.y == d.v.back()) continue;
            throw InvalidArgument("diagonalDistance: curve is not monotone along the diagonals");
        }
        d.u.push_back(u);
        d.v.push_back(p.x + p.y);
    }
    if (d.u.empty()) throw InvalidArgument("diagonalDistance: empty curve");
    return d;
}

// v on the diagonal x - y = u; past the end points the curve runs along the axes, where v = |u|.
double vAt(const Diagonal& d, double u) {
    if (u <= d.u.front()) return u < d.u.front() ? std::abs(u) : d.v.front();
    if (u >= d.u.back()) return u > d.u.back() ? std::abs(u) : d.v.back();
    const auto it = std::upper_bound(d.u.begin(), d.u.end(), u);
    const auto k = static_cast<std::size_t>(it - d.u.begin());
    const double t = (u - d.u[k - 1]) / (d.u[k] - d.u[k - 1]);
    return d.v[k - 1] + t * (d.v[k] - d.v[k - 1]);
}

}  // namespace

// ---- psi ----

DirectionVector psiClosed(int n) {
    if (n < 2) throw InvalidArgument("psi: n must be at least 2");
    DirectionVector d;
    for (int k = 1; k <= n; ++k) d.components.emplace_back(static_cast<long>(n + 1 - 2 * k));
    d.unit = normalized(d.components);
    return d;
}

DirectionVector psiFromCorrelations(int n) {
    if (n < 2) throw InvalidArgument("psi: n must be at least 2");
    DirectionVector d;
    d.components.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Rational e = correlations::eAdjacent(n, j, i);
            d.components[static_cast<std::size_t>(i - 1)] += e;
            d.components[static_cast<std::size_t>(j - 1)] -= e;
        }
    }
    d.unit = normalized(d.components);
    return d;
}

std::optional<Rational> positiveRatio(const DirectionVector& a, const DirectionVector& b) {
    if (a.components.size() != b.components.size()) return std::nullopt;
    std::optional<Rational> ratio;
    for (std::size_t k = 0; k < a.components.size(); ++k) {
        if (a.components[k].isZero()) {
            if (!b.components[k].isZero()) return std::nullopt;
            continue;
        }
        const Rational r = b.components[k] / a.components[k];
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    if (!ratio || ratio->sign() <= 0) return std::nullopt;
    return ratio;
}

// ---- partitions ----

std::int64_t CorePartition::boxes() const {
    std::int64_t b = 0;
    for (auto r : rows) b += r;
    return b;
}

std::int64_t CorePartition::hook(std::int64_t i, std::int64_t j) const {
    if (i < 1 || i > static_cast<std::int64_t>(rows.size()) || j < 1 || j > rows[static_cast<std::size_t>(i - 1)]) {
        throw InvalidArgument("hook: cell outside the diagram");
    }
    std::int64_t below = 0;  // cells in column j beneath row i
    for (std::size_t k = static_cast<std::size_t>(i); k < rows.size() && rows[k] >= j; ++k) ++below;
    return rows[static_cast<std::size_t>(i - 1)] - j + below + 1;
}

std::string CorePartition::toString() const {
    std::string s = "(";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(rows[k]);
    }
    return s + ")";
}

void validatePartition(const CorePartition& p) {
    for (std::size_t k = 0; k < p.rows.size(); ++k) {
        if (p.rows[k] < 1 || (k > 0 && p.rows[k] > p.rows[k - 1])) {
            throw InvalidArgument("partition " + p.toString() + " is not weakly decreasing with positive parts");
        }
    }
}

bool isNCore(const CorePartition& p, int n) {
    if (n < 1) throw InvalidArgument("isNCore: n must be positive");
    validatePartition(p);
    const MayaWindow w = mayaOf(p);
    // Lowest hole and highest bead per residue, inside the window.
    std::vector<std::int64_t> lowestHole(static_cast<std::size_t>(n), INT64_MAX);
    std::vector<std::int64_t> highestBead(static_cast<std::size_t>(n), INT64_MIN);
    for (std::size_t k = 0; k < w.bead.size(); ++k) {
        const std::int64_t pos = w.first + static_cast<std::int64_t>(k);
        const auto r = static_cast<std::size_t>(mod(pos, n));
        if (w.bead[k]) highestBead[r] = std::max(highestBead[r], pos);
        else lowestHole[r] = std::min(lowestHole[r], pos);
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
        if (lowestHole[r] < highestBead[r]) return false;
    }
    return true;
}

bool isNCoreByHooks(const CorePartition& p, int n) {
    if (n < 1) throw InvalidArgument("isNCoreByHooks: n must be positive");
    validatePartition(p);
    if (p.rows.empty()) return true;
    std::vector<std::int64_t> cols(static_cast<std::size_t>(p.rows.front()), 0);
    for (auto r : p.rows) {
        for (std::int64_t j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        for (std::int64_t j = 0; j < p.rows[i]; ++j) {
            const std::int64_t hook = p.rows[i] - j + cols[static_cast<std::size_t>(j)] - static_cast<std::int64_t>(i) - 1;
            if (hook % n == 0) return false;
        }
    }
    return true;
}

CorePartition growStep(const CorePartition& core, int n, int t) {
    if (n < 1 || t < 0 || t >= n) throw InvalidArgument("growStep: need 0 <= t < n");
    CorePartition next = core;
    const auto rows = static_cast<std::int64_t>(core.rows.size());
    for (std::int64_t i = 1; i <= rows; ++i) {
        const std::int64_t len = core.rows[static_cast<std::size_t>(i - 1)];
        const bool addable = i == 1 || core.rows[static_cast<std::size_t>(i - 2)] > len;
        if (addable && mod(len + 1 - i, n) == t) ++next.rows[static_cast<std::size_t>(i - 1)];
    }
    if (mod(-rows, n) == t) next.rows.push_back(1);
    return next;
}

NCore::NCore(int n) : n_(n), h_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw InvalidArgument("NCore: n must be positive");
}

std::int64_t NCore::grow(int t) {
    if (t < 0 || t >= n_) throw InvalidArgument("NCore::grow: need 0 <= t < n");
    if (n_ == 1) return 0;
    std::int64_t added = 0;
    if (t > 0) {
        auto& lo = h_[static_cast<std::size_t>(t - 1)];
        auto& hi = h_[static_cast<std::size_t>(t)];
        if (lo > hi) {
            added = lo - hi;
            std::swap(lo, hi);
        }
    } else {
        auto& zero = h_.front();
        auto& last = h_.back();
        if (last + 1 > zero) {
            added = last + 1 - zero;
            const std::int64_t z = zero;
            zero = last + 1;
            last = z - 1;
        }
    }
    boxes_ += added;
    return added;
}

std::vector<bool> NCore::maya(std::int64_t& first) const {
    std::int64_t lo = INT64_MAX;
    std::int64_t hi = INT64_MIN;
    for (int r = 0; r < n_; ++r) {
        const std::int64_t e = r + static_cast<std::int64_t>(n_) * h_[static_cast<std::size_t>(r)];
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    first = lo;
    std::vector<bool> bead(static_cast<std::size_t>(hi - lo), false);
    for (std::int64_t pos = lo; pos < hi; ++pos) {
        const auto r = static_cast<std::size_t>(mod(pos, n_));
        bead[static_cast<std::size_t>(pos - lo)] = floorDiv(pos, n_) < h_[r];
    }
    return bead;
}

CorePartition NCore::partition() const {
    std::int64_t first = 0;
    const auto bead = maya(first);
    std::int64_t beads = 0;
    for (bool b : bead) beads += b;
    if (first + beads != 0) throw InternalError("NCore: abacus lost charge zero");
    CorePartition p;
    std::int64_t k = 0;
    for (std::size_t idx = bead.size(); idx-- > 0;) {
        if (!bead[idx]) continue;
        ++k;
        const std::int64_t len = first + static_cast<std::int64_t>(idx) + k;
        if (len > 0) p.rows.push_back(len);
    }
    return p;
}

NCore randomGrowth(int n, std::int64_t steps, std::uint64_t seed) {
    if (steps < 0) throw InvalidArgument("randomGrowth: steps must be nonnegative");
    NCore core(n);
    Rng rng(seed);
    for (std::int64_t s = 0; s < steps; ++s) core.grow(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    return core;
}

NCore replayGrowth(int n, const std::vector<int>& residues) {
    NCore core(n);
    for (int t : residues) core.grow(t);
    return core;
}

std::vector<int> blockProfile(const CorePartition& p, int n) {
    if (n < 1) throw InvalidArgument("blockProfile: n must be positive");
    validatePartition(p);
    const MayaWindow w = mayaOf(p);
    if (w.bead.empty()) return {};
    const std::int64_t last = w.first + static_cast<std::int64_t>(w.bead.size()) - 1;
    std::vector<int> out;
    for (std::int64_t q = floorDiv(w.first, n); q <= floorDiv(last, n); ++q) {
        int count = 0;
        for (std::int64_t pos = q * n; pos < (q + 1) * n; ++pos) {
            if (pos < w.first) ++count;
            else if (pos <= last && w.bead[static_cast<std::size_t>(pos - w.first)]) ++count;
        }
        out.push_back(count);
    }
    return out;
}

// ---- geometry ----

LimitCurve limitCurve(int n) {
    if (n < 2) throw InvalidArgument("limitCurve: n must be at least 2");
    LimitCurve c;
    c.n = n;
    c.gamma = 2.0 * std::sqrt(6.0) / (n * std::sqrt(static_cast<double>(n) * n - 1.0));
    for (int i = 1; i <= n; ++i) {
        const double x = i * (i - 1) / 2.0;
        const double y = (n - i + 1) * (n - i) / 2.0;
        c.vertices.push_back({c.gamma * x, c.gamma * y});
    }
    return c;
}

double areaUnder(const std::vector<Point>& curve) {
    std::vector<Point> poly{{0.0, 0.0}};
    poly.insert(poly.end(), curve.begin(), curve.end());
    double twice = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Point& a = poly[k];
        const Point& b = poly[(k + 1) % poly.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) / 2.0;
}

std::vector<Point> staircase(const CorePartition& p) {
    validatePartition(p);
    const MayaWindow w = mayaOf(p);
    return walk(w.first, w.bead);
}

std::vector<Point> staircase(const NCore& core) {
    std::int64_t first = 0;
    const auto bead = core.maya(first);
    return walk(first, bead);
}

double diagonalDistance(const std::vector<Point>& a, const std::vector<Point>& b) {
    const Diagonal da = diagonalForm(a);
    const Diagonal db = diagonalForm(b);
    std::vector<double> grid = da.u;
    grid.insert(grid.end(), db.u.begin(), db.u.end());
    const double lo = std::min(da.u.front(), db.u.front());
    const double hi = std::max(da.u.back(), db.u.back());
    constexpr int kUniform = 1000;
    for (int k = 0; k < kUniform; ++k) grid.push_back(lo + (hi - lo) * k / (kUniform - 1));
    double sup = 0.0;
    for (double u : grid) sup = std::max(sup, std::abs(vAt(da, u) - vAt(db, u)));
    return sup / std::sqrt(2.0);
}

namespace {

double scaledDistance(std::vector<Point> stairs, std::int64_t boxes, int n) {
    if (boxes <= 0) throw InvalidArgument("shapeDistance: empty core");
    const double s = 1.0 / std::sqrt(static_cast<double>(boxes));
    for (auto& p : stairs) {
        p.x *= s;
        p.y *= s;
    }
    return diagonalDistance(stairs, limitCurve(n).vertices);
}

}  // namespace

double shapeDistance(const CorePartition& core, int n) { return scaledDistance(staircase(core), core.boxes(), n); }

double shapeDistance(const NCore& core) { return scaledDistance(staircase(core), core.boxes(), core.n()); }

std::string toCsv(const std::vector<Point>& points) {
    std::ostringstream out;
    out.precision(17);
    out << "x,y\n";
    for (const auto& p : points) out << p.x << ',' << p.y << '\n';
    return out.str();
}

}  // namespace mtasep::limits
