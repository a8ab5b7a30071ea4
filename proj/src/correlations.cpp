#include "mtasep/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "mtasep/error.hpp"
#include "mtasep/ssyt.hpp"

namespace mtasep::correlations {

namespace {

Rational frac(long p, long q) { return Rational(p, q); }

void requireLabel(int n, int label, const char* where) {
    if (label < 1 || label > n) {
        throw InvalidArgument(std::string(where) + ": label " + std::to_string(label) + " outside 1.." +
                              std::to_string(n));
    }
}

Rational quotient(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace

Rational marginal(const ExactDist& dist, const PatternQuery& q) {
    q.validate(dist.sector());
    BigInt hits = 0;
    for (const auto& [word, weight] : dist.entries()) {
        if (q.matches(word)) hits += weight;
    }
    return Rational(hits, dist.total());
}

Projection projectSector(int n, const std::vector<int>& labels) {
    if (n < 1) throw InvalidArgument("projectSector: n must be positive");
    for (std::size_t a = 0; a < labels.size(); ++a) {
        requireLabel(n, labels[a], "projectSector");
        if (a > 0 && labels[a] <= labels[a - 1]) {
            throw InvalidArgument("projectSector: labels must be strictly increasing");
        }
    }
    Projection p;
    p.n = n;
    p.labelMap.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> counts;
    int next = 1;
    std::size_t a = 0;
    for (int l = 1; l <= n;) {
        if (a < labels.size() && labels[a] == l) {
            counts.push_back(1);
            p.labelMap[static_cast<std::size_t>(l)] = next++;
            ++a;
            ++l;
            continue;
        }
        int run = 0;
        while (l <= n && !(a < labels.size() && labels[a] == l)) {
            p.labelMap[static_cast<std::size_t>(l)] = next;
            ++run;
            ++l;
        }
        counts.push_back(run);
        ++next;
    }
    p.sector = Sector(counts);
    return p;
}

MarginalOracle::MarginalOracle(int n, OracleOptions options) : n_(n), options_(options) {
    if (n < 1 || n > kMaxRingSize) throw InvalidArgument("MarginalOracle: n outside 1.." + std::to_string(kMaxRingSize));
}

const ExactDist& MarginalOracle::distribution(const Sector& sector) {
    if (sector.ringSize() != n_) throw InvalidArgument("MarginalOracle: sector is not on " + std::to_string(n_) + " sites");
    auto it = dists_.find(sector);
    if (it != dists_.end()) return *it->second;
    auto dist = std::make_unique<ExactDist>(
        mlq::stationaryFromQueues(sector, mlq::EnumerationOptions{options_.budget, options_.threads}));
    if (sector.species() > 1) queues_ += sector.queueCount().get_ui();
    return *dists_.emplace(sector, std::move(dist)).first->second;
}

std::vector<const ExactDist*> MarginalOracle::cached() const {
    std::vector<const ExactDist*> out;
    for (const auto& [sector, dist] : dists_) out.push_back(dist.get());
    return out;
}

const MarginalOracle::Table& MarginalOracle::table(const Sector& sector, const std::vector<int>& positions) {
    auto key = std::make_pair(sector, positions);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    const ExactDist& dist = distribution(sector);
    Table t;
    std::vector<int> letters(positions.size());
    for (const auto& [word, weight] : dist.entries()) {
        for (std::size_t k = 0; k < positions.size(); ++k) letters[k] = word[positions[k] - 1];
        t[letters] += weight;
    }
    return tables_.emplace(std::move(key), std::move(t)).first->second;
}

Rational MarginalOracle::probability(const PatternQuery& q) {
    if (q.assignments.empty()) return Rational(1);
    auto sorted = q.assignments;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> labels;
    for (std::size_t a = 0; a < sorted.size(); ++a) {
        const auto [pos, label] = sorted[a];
        if (pos < 1 || pos > n_) throw InvalidArgument("MarginalOracle: position " + std::to_string(pos) + " outside the ring");
        if (a > 0 && pos == sorted[a - 1].first) throw InvalidArgument("MarginalOracle: position assigned twice");
        requireLabel(n_, label, "MarginalOracle");
        labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return Rational(0);

    const Projection proj = projectSector(n_, labels);
    std::vector<int> positions;
    std::vector<int> key;
    for (const auto& [pos, label] : sorted) {
        positions.push_back(pos);
        key.push_back(proj.project(label));
    }
    const Table& t = table(proj.sector, positions);
    const auto hit = t.find(key);
    if (hit == t.end()) return Rational(0);
    return Rational(hit->second, distribution(proj.sector).total());
}

Rational MarginalOracle::nearest(const std::vector<int>& labels) {
    return probability(PatternQuery::consecutive(labels));
}

// ---- two-point ----

Rational eAdjacent(int n, int w1, int w2) {
    if (n < 2) throw InvalidArgument("eAdjacent: n must be at least 2");
    requireLabel(n, w1, "eAdjacent");
    requireLabel(n, w2, "eAdjacent");
    if (w1 == w2) throw InvalidArgument("eAdjacent: labels must differ");
    if (w1 > w2) return Rational(BigInt(w1 - w2), BigInt(n) * binom(n, 2));
    Rational e = frac(1, static_cast<long>(n) * n);
    if (w1 == w2 - 1) e += frac(static_cast<long>(w1) * (n - w1), static_cast<long>(n) * n * (n - 1));
    return e;
}

Rational eDistanceQuotient(int n, int j, int i, int a) {
    if (!(j > i)) throw InvalidArgument("eDistanceQuotient: need j > i");
    requireLabel(n, i, "eDistanceQuotient");
    requireLabel(n, j, "eDistanceQuotient");
    if (a < 2 || a > n) throw InvalidArgument("eDistanceQuotient: position outside 2..n");
    const long beta = a - 1;
    const long m = n - 1;
    const auto y = [&](long r, long l) { return ssyt::countY(r, l, beta, m); };
    Rational e = quotient(y(n - i, n - j + 1), binom(n, i - 1) * binom(n, j - 1));
    e -= quotient(y(n - i, n - j), binom(n, i - 1) * binom(n, j));
    e -= quotient(y(n - i - 1, n - j + 1), binom(n, i) * binom(n, j - 1));
    e += quotient(y(n - i - 1, n - j), binom(n, i) * binom(n, j));
    return e;
}

Rational eDistanceTop(int n, int i, int a) {
    if (i < 1 || i > n - 1) throw InvalidArgument("eDistanceTop: need 1 <= i <= n-1");
    if (a < 2 || a > n) throw InvalidArgument("eDistanceTop: position outside 2..n");
    const BigInt num = BigInt(n - i) * binom(i - 1, a - 2) - binom(i - 1, a - 1);
    return frac(1, static_cast<long>(n) * n) + quotient(num, BigInt(a) * n * binom(n, a));
}

Rational eDistance(int n, int w1, int wa, int a) {
    if (n < 2) throw InvalidArgument("eDistance: n must be at least 2");
    requireLabel(n, w1, "eDistance");
    requireLabel(n, wa, "eDistance");
    if (w1 == wa) throw InvalidArgument("eDistance: labels must differ");
    if (a < 2 || a > n) throw InvalidArgument("eDistance: position outside 2..n");
    if (w1 > wa) {
        const Rational e = eDistanceQuotient(n, w1, wa, a);
        if (w1 == n && e != eDistanceTop(n, wa, a)) {
            throw InternalError("eDistance: quotient and top-label closed form disagree at n=" + std::to_string(n));
        }
        return e;
    }
    // P(w_1 = i, w_a = j) = P(w_1 = j, w_{n-a+2} = i) by rotation.
    const Rational e = eDistance(n, wa, w1, n - a + 2);
    if (a <= wa - w1 && e != frac(1, static_cast<long>(n) * n)) {
        throw InternalError("eDistance: uniform window violated at n=" + std::to_string(n));
    }
    return e;
}

TwoPointAggregate aggregateTwoPoint(int n) {
    if (n < 2) throw InvalidArgument("aggregateTwoPoint: n must be at least 2");
    const long nn = static_cast<long>(n) * n;
    TwoPointAggregate agg;
    agg.descent = frac(1, 3) + frac(1, 3L * n);
    agg.stepUp = frac(1, 6) + frac(7L * n - 6, 6 * nn);
    agg.jumpUp = frac(1, 2) - frac(3L * n - 2, 2 * nn);
    return agg;
}

// ---- three-point ----

Pattern3 parsePattern3(const std::string& text) {
    static const std::pair<const char*, Pattern3> names[] = {{"321", Pattern3::P321}, {"213", Pattern3::P213},
                                                              {"132", Pattern3::P132}, {"312", Pattern3::P312},
                                                              {"231", Pattern3::P231}, {"123", Pattern3::P123}};
    for (const auto& [name, p] : names) {
        if (text == name) return p;
    }
    throw InvalidArgument("unknown three-point pattern '" + text + "'");
}

std::string toString(Pattern3 p) {
    switch (p) {
        case Pattern3::P321: return "321";
        case Pattern3::P213: return "213";
        case Pattern3::P132: return "132";
        case Pattern3::P312: return "312";
        case Pattern3::P231: return "231";
        case Pattern3::P123: return "123";
    }
    return "?";
}

Pattern3 patternOf(int w1, int w2, int w3) {
    if (w1 == w2 || w2 == w3 || w1 == w3) throw InvalidArgument("patternOf: letters must be distinct");
    const auto rank = [&](int w) { return 1 + (w > w1) + (w > w2) + (w > w3); };
    return parsePattern3(std::to_string(rank(w1)) + std::to_string(rank(w2)) + std::to_string(rank(w3)));
}

namespace {

Rational e321(long n, long i, long j, long k) {
    return frac(6 * (j - i) * (k - i) * (k - j), n * n * n * (n - 1) * (n - 1) * (n - 2));
}

// E_{j,i,k}
Rational e213(long n, long i, long j, long k) {
    if (k > j + 1) return frac(2 * (j - i), n * n * n * (n - 1));
    return frac(2 * (j - i), n * (n - 1)) * (frac(1, n * n) + frac(j * (n - j), n * n * (n - 1))) +
           frac(2 * j * (j - 1) * (n - j), n * n * n * (n - 1) * (n - 1) * (n - 2));
}

// E_{j,k,i}
Rational e231(long n, long i, long j, long k) {
    if (k > j + 1) {
        return frac(3 * (j - i) * (2 * n - j - i - 1), n * n * n * (n - 1) * (n - 2)) -
               frac(4 * (j - i) * (n - k), n * n * n * (n - 1) * (n - 1));
    }
    return frac((j - i) * (n - 1 - j), n * n * (n - 1) * (n - 1)) *
               (frac(1, n - 2) + frac(3 * (n - i - 1), n) - frac((n - 1 - j) * (3 * n - 3 * i + j - 1), n * (n - 2))) +
           frac(6 * (j - i) * (n - i), n * n * n * (n - 1) * (n - 2));
}

// E_{i,j,k}, conjectural.
Rational e123(long n, long i, long j, long k) {
    const long n3 = n * n * n;
    if (i < j - 1 && j - 1 < k - 2) return frac(1, n3);
    if (i == j - 1 && j - 1 < k - 2) return frac(n - 1 + i * (n - i), n3 * (n - 1));
    if (i < j - 1 && j - 1 == k - 2) return frac(n - 1 + j * (n - j), n3 * (n - 1));
    return frac((n - 1 + i * (n - i)) * (n - 1 + (i + 1) * (n - i - 1)), n3 * (n - 1) * (n - 1)) +
           frac(2 * i * (i + 1) * (n - i) * (n - i - 1), n3 * (n - 1) * (n - 1) * (n - 2));
}

}  // namespace

ThreePointValue eThree(int n, Pattern3 pattern, int i, int j, int k) {
    if (n < 3) throw InvalidArgument("eThree: n must be at least 3");
    if (!(1 <= i && i < j && j < k && k <= n)) throw InvalidArgument("eThree: need 1 <= i < j < k <= n");
    // Particle-hole: E_{a,b,c} = E_{n+1-c, n+1-b, n+1-a}.
    const int mi = n + 1 - k;
    const int mj = n + 1 - j;
    const int mk = n + 1 - i;
    switch (pattern) {
        case Pattern3::P321: return {e321(n, i, j, k), false};
        case Pattern3::P213: return {e213(n, i, j, k), false};
        case Pattern3::P231: return {e231(n, i, j, k), false};
        case Pattern3::P132: return {e213(n, mi, mj, mk), false};
        case Pattern3::P312: return {e231(n, mi, mj, mk), false};
        case Pattern3::P123: return {e123(n, i, j, k), true};
    }
    throw InternalError("eThree: unhandled pattern");
}

ThreePointValue eThreeAt(int n, int w1, int w2, int w3) {
    for (int w : {w1, w2, w3}) requireLabel(n, w, "eThreeAt");
    std::array<int, 3> s{w1, w2, w3};
    std::sort(s.begin(), s.end());
    return eThree(n, patternOf(w1, w2, w3), s[0], s[1], s[2]);
}

Rational eDecreasing(int n, const std::vector<int>& labels) {
    const auto r = static_cast<long>(labels.size());
    if (r < 1 || r > n) throw InvalidArgument("eDecreasing: need 1 <= r <= n labels");
    for (std::size_t a = 0; a < labels.size(); ++a) {
        requireLabel(n, labels[a], "eDecreasing");
        if (a > 0 && labels[a] >= labels[a - 1]) throw InvalidArgument("eDecreasing: labels must strictly decrease");
    }
    BigInt num = 1;
    for (long f = 2; f <= r; ++f) num *= f;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) num *= labels[a] - labels[b];
    }
    BigInt den = 1;
    for (long i = 0; i < r; ++i) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n - i), static_cast<unsigned long>(r - i));
        den *= power;
    }
    return Rational(num, den);
}

std::vector<AggregateRow> aggregateThreePoint(int n) {
    if (n < 5) throw InvalidArgument("aggregateThreePoint: n must be at least 5");
    const long m = n;
    const long n2 = m * m;
    const long n3 = n2 * m;
    const Rational r132 = frac((m - 2) * (m - 3), 12 * n2);
    const Rational r132adj = frac(n3 + 8 * n2 - 23 * m + 10, 20 * n2 * (m - 1));
    const Rational r312 = frac((m + 1) * (m - 3) * (7 * m - 10), 60 * n2 * (m - 1));
    const Rational r312adj = frac((m + 1) * (n2 + 7 * m - 10), 20 * n2 * (m - 1));
    const Rational r123one = frac((m - 2) * (m - 3) * (m + 8), 12 * n3);
    return {
        {"(k,j,i)", frac((m + 1) * (m + 2), 30 * m * (m - 1)), false},
        {"(i,k,j) j>i+1", r132, false},
        {"(j,i,k) k>j+1", r132, false},
        {"(i,k,i+1)", r132adj, false},
        {"(j,i,j+1)", r132adj, false},
        {"(k,i,j) j>i+1", r312, false},
        {"(j,k,i) k>j+1", r312, false},
        {"(k,i,i+1)", r312adj, false},
        {"(j,j+1,i)", r312adj, false},
        {"(i,j,k)", frac((m - 2) * (m - 3) * (m - 4), 6 * n3), true},
        {"(i,i+1,k)", r123one, true},
        {"(i,j,j+1)", r123one, true},
        {"(i,i+1,i+2)", frac(n2 * n2 + 13 * n3 + 32 * n2 - 160 * m + 120, 30 * n3 * (m - 1)), true},
    };
}

int aggregateRowOf(int n, int w1, int w2, int w3) {
    for (int w : {w1, w2, w3}) requireLabel(n, w, "aggregateRowOf");
    std::array<int, 3> s{w1, w2, w3};
    std::sort(s.begin(), s.end());
    const int i = s[0];
    const int j = s[1];
    const int k = s[2];
    switch (patternOf(w1, w2, w3)) {
        case Pattern3::P321: return 0;
        case Pattern3::P132: return j == i + 1 ? 3 : 1;
        case Pattern3::P213: return k == j + 1 ? 4 : 2;
        case Pattern3::P312: return j == i + 1 ? 7 : 5;
        case Pattern3::P231: return k == j + 1 ? 8 : 6;
        case Pattern3::P123:
            if (j == i + 1 && k == j + 1) return 12;
            if (j == i + 1) return 10;
            if (k == j + 1) return 11;
            return 9;
    }
    throw InternalError("aggregateRowOf: unhandled pattern");
}

// ---- continuum trend ----

std::vector<TrendPoint> densityTrend() {
    const std::vector<int> ns{20, 40, 80};
    std::vector<TrendPoint> out;
    const auto finish = [&](TrendPoint p) {
        p.monotone = true;
        for (std::size_t a = 1; a < p.scaled.size(); ++a) {
            if (!(std::abs(p.scaled[a] - p.limit) < std::abs(p.scaled[a - 1] - p.limit))) p.monotone = false;
        }
        out.push_back(std::move(p));
    };
    // Labels sit at fixed fractions of n: x=-1/2, y=1/2, z=4/5 map to n/4, 3n/4, 9n/10.
    {
        TrendPoint p{"(n^2/4) E_{j,i} at (x,y)=(-1/2,1/2)", ns, {}, 0.25, false};
        for (int n : ns) p.scaled.push_back(eAdjacent(n, 3 * n / 4, n / 4).toDouble() * n * n / 4.0);
        finish(p);
    }
    {
        TrendPoint p{"(n/2) E_{j-1,j} at y=1/2", ns, {}, (1.0 - 0.25) / 8.0, false};
        for (int n : ns) p.scaled.push_back(eAdjacent(n, 3 * n / 4 - 1, 3 * n / 4).toDouble() * n / 2.0);
        finish(p);
    }
    {
        const double x = -0.5, y = 0.5, z = 0.8;
        TrendPoint p{"(n/2)^3 E_{k,j,i} at (x,y,z)=(-1/2,1/2,4/5)", ns, {}, 3.0 * (y - x) * (z - x) * (z - y) / 32.0,
                     false};
        for (int n : ns) {
            const double v = eThree(n, Pattern3::P321, n / 4, 3 * n / 4, 9 * n / 10).value.toDouble();
            p.scaled.push_back(v * std::pow(n / 2.0, 3));
        }
        finish(p);
    }
    return out;
}

}  // namespace mtasep::correlations
