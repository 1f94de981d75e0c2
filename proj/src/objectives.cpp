#include "swarmopt/objectives.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace swarmopt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sphere(const RealVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double schwefel_2_22(const RealVector& x) {
    double sum = 0.0, prod = 1.0;
    for (double v : x) {
        sum += std::fabs(v);
        prod *= std::fabs(v);
    }
    return sum + prod;
}

double schwefel_1_2(const RealVector& x) {
    double s = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

double schwefel_2_21(const RealVector& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

double rosenbrock(const RealVector& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double t = x[i + 1] - x[i] * x[i];
        s += 100.0 * t * t + (x[i] - 1.0) * (x[i] - 1.0);
    }
    return s;
}

double step(const RealVector& x) {
    double s = 0.0;
    for (double v : x) {
        const double t = std::floor(v + 0.5);
        s += t * t;
    }
    return s;
}

double quartic_noise(const RealVector& x, RandomStream& rng) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v2 = x[i] * x[i];
        s += static_cast<double>(i + 1) * v2 * v2;
    }
    return s + rng.uniform01();
}

double schwefel_2_26(const RealVector& x) {
    double s = 0.0;
    for (double v : x) s -= v * std::sin(std::sqrt(std::fabs(v)));
    return s;
}

double rastrigin(const RealVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
    return s;
}

double ackley(const RealVector& x) {
    const double n = static_cast<double>(x.size());
    double s1 = 0.0, s2 = 0.0;
    for (double v : x) {
        s1 += v * v;
        s2 += std::cos(kTwoPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(s1 / n)) - std::exp(s2 / n) +
           20.0 + std::exp(1.0);
}

double griewank(const RealVector& x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

double penalized_1(const RealVector& x) {
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * std::pow(std::sin(kPi * y(0)), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double yi = y(i);
        s += (yi - 1.0) * (yi - 1.0) *
             (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2));
    }
    const double yn = y(n - 1);
    s += (yn - 1.0) * (yn - 1.0);
    s *= kPi / static_cast<double>(n);
    for (double v : x) s += penalty_u(v, 10.0, 100.0, 4.0);
    return s;
}

double penalized_2(const RealVector& x) {
    const std::size_t n = x.size();
    double s = std::pow(std::sin(3.0 * kPi * x[0]), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        s += (x[i] - 1.0) * (x[i] - 1.0) *
             (1.0 + std::pow(std::sin(3.0 * kPi * x[i + 1]), 2));
    }
    s += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) *
         (1.0 + std::pow(std::sin(kTwoPi * x[n - 1]), 2));
    s *= 0.1;
    for (double v : x) s += penalty_u(v, 5.0, 100.0, 4.0);
    return s;
}

double foxholes(const RealVector& x) {
    static constexpr std::array<double, 5> base = {-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        const double a1 = base[j % 5];
        const double a2 = base[j / 5];
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(x[0] - a1, 6) +
                    std::pow(x[1] - a2, 6));
    }
    return 1.0 / s;
}

double kowalik(const RealVector& x) {
    static constexpr std::array<double, 11> a = {
        0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
        0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static constexpr std::array<double, 11> binv = {0.25, 0.5, 1, 2,  4,  6,
                                                    8,    10,  12, 14, 16};
    double s = 0.0;
    for (int i = 0; i < 11; ++i) {
        const double b = 1.0 / binv[i];
        const double t =
            a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += t * t;
    }
    return s;
}

double six_hump_camel(const RealVector& x) {
    const double x1 = x[0], x2 = x[1];
    return 4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 +
           x1 * x2 - 4.0 * x2 * x2 + 4.0 * std::pow(x2, 4);
}

double branin(const RealVector& x) {
    const double x1 = x[0], x2 = x[1];
    const double t = x2 - 5.1 / (4.0 * kPi * kPi) * x1 * x1 + 5.0 / kPi * x1 - 6.0;
    return t * t + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

double goldstein_price(const RealVector& x) {
    const double x1 = x[0], x2 = x[1];
    const double u = 1.0 + (x1 + x2 + 1.0) * (x1 + x2 + 1.0) *
                               (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double v = 30.0 + (2.0 * x1 - 3.0 * x2) * (2.0 * x1 - 3.0 * x2) *
                               (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                36.0 * x1 * x2 + 27.0 * x2 * x2);
    return u * v;
}

const std::array<double, 4> kHartmannC = {1.0, 1.2, 3.0, 3.2};

double hartmann3(const RealVector& x) {
    static constexpr double A[4][3] = {
        {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
    static constexpr double P[4][3] = {{0.3689, 0.117, 0.2673},
                                       {0.4699, 0.4387, 0.747},
                                       {0.1091, 0.8732, 0.5547},
                                       {0.03815, 0.5743, 0.8828}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j)
            e += A[i][j] * (x[j] - P[i][j]) * (x[j] - P[i][j]);
        s -= kHartmannC[i] * std::exp(-e);
    }
    return s;
}

double hartmann6(const RealVector& x) {
    static constexpr double A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                       {0.05, 10, 17, 0.1, 8, 14},
                                       {3, 3.5, 1.7, 10, 17, 8},
                                       {17, 8, 0.05, 10, 0.1, 14}};
    static constexpr double P[4][6] = {
        {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
        {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
        {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
        {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j)
            e += A[i][j] * (x[j] - P[i][j]) * (x[j] - P[i][j]);
        s -= kHartmannC[i] * std::exp(-e);
    }
    return s;
}

double shekel(const RealVector& x, int m) {
    static constexpr double A[10][4] = {
        {4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8},       {6, 6, 6, 6},
        {3, 7, 3, 7}, {2, 9, 2, 9}, {5, 5, 3, 3},       {8, 1, 8, 1},
        {6, 2, 6, 2}, {7, 3.6, 7, 3.6}};
    static constexpr double C[10] = {0.1, 0.2, 0.2, 0.4, 0.4,
                                     0.6, 0.3, 0.7, 0.5, 0.5};
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = C[i];
        for (int j = 0; j < 4; ++j) d += (x[j] - A[i][j]) * (x[j] - A[i][j]);
        s -= 1.0 / d;
    }
    return s;
}

// --- CEC2019 basics ---------------------------------------------------

double chebyshev(const RealVector& x) {
    const int n = static_cast<int>(x.size());
    // T_{n-1}(1.2) via the Chebyshev recurrence.
    double a = 1.0, b = 1.2, dx = 1.2;
    for (int j = 0; j < n - 2; ++j) {
        dx = 2.4 * b - a;
        a = b;
        b = dx;
    }
    auto horner = [&](double y) {
        double px = x[0];
        for (int j = 1; j < n; ++j) px = y * px + x[j];
        return px;
    };
    const int sample = 32 * n;
    const double dy = 2.0 / static_cast<double>(sample);
    double y = -1.0, sum = 0.0;
    for (int i = 0; i <= sample; ++i) {
        const double px = horner(y);
        if (px < -1.0 || px > 1.0) sum += (1.0 - std::fabs(px)) * (1.0 - std::fabs(px));
        y += dy;
    }
    for (double yb : {-1.2, 1.2}) {
        const double px = horner(yb);
        // Tolerant comparison: at the optimum px equals dx up to rounding.
        if (px < dx * (1.0 - 1e-12)) sum += px * px;
    }
    return sum;
}

double inverse_hilbert(const RealVector& x) {
    const int b = static_cast<int>(std::sqrt(static_cast<double>(x.size())));
    double sum = 0.0;
    for (int i = 0; i < b; ++i) {
        for (int k = 0; k < b; ++k) {
            double y = 0.0;
            for (int j = 0; j < b; ++j)
                y += x[k + b * j] / static_cast<double>(i + j + 1);
            sum += std::fabs(y - (i == k ? 1.0 : 0.0));
        }
    }
    return sum;
}

double lennard_jones(const RealVector& x) {
    const int atoms = static_cast<int>(x.size()) / 3;
    double sum = 0.0;
    for (int i = 0; i < atoms - 1; ++i) {
        for (int j = i + 1; j < atoms; ++j) {
            const double dx = x[3 * i] - x[3 * j];
            const double dy = x[3 * i + 1] - x[3 * j + 1];
            const double dz = x[3 * i + 2] - x[3 * j + 2];
            const double ed = dx * dx + dy * dy + dz * dz;
            const double ud = ed * ed * ed;
            sum += (ud > 1e-10) ? (1.0 / ud - 2.0) / ud : 1e20;
        }
    }
    // Offset by the putative 6-atom cluster minimum so the floor is 0.
    return sum + 12.7120622568;
}

double weierstrass(const RealVector& x) {
    constexpr double a = 0.5, b = 3.0;
    constexpr int kmax = 20;
    double ak[kmax + 1], bk[kmax + 1];
    for (int k = 0; k <= kmax; ++k) {
        ak[k] = std::pow(a, k);
        bk[k] = std::pow(b, k);
    }
    double center = 0.0;
    for (int k = 0; k <= kmax; ++k) center += ak[k] * std::cos(kTwoPi * bk[k] * 0.5);
    double s = 0.0;
    for (double v : x)
        for (int k = 0; k <= kmax; ++k)
            s += ak[k] * std::cos(kTwoPi * bk[k] * (v + 0.5));
    return s - static_cast<double>(x.size()) * center;
}

double modified_schwefel(const RealVector& x) {
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (double v : x) {
        const double z = v + 4.209687462275036e+002;
        if (z > 500.0) {
            const double zm = 500.0 - std::fmod(z, 500.0);
            s -= zm * std::sin(std::sqrt(zm));
            const double t = (z - 500.0) / 100.0;
            s += t * t / n;
        } else if (z < -500.0) {
            const double zm = std::fmod(std::fabs(z), 500.0) - 500.0;
            s -= zm * std::sin(std::sqrt(std::fabs(zm)));
            const double t = (z + 500.0) / 100.0;
            s += t * t / n;
        } else {
            s -= z * std::sin(std::sqrt(std::fabs(z)));
        }
    }
    return s + 4.189828872724338e+002 * n;
}

double expanded_schaffer6(const RealVector& x) {
    auto g = [](double u, double v) {
        const double r2 = u * u + v * v;
        const double sn = std::sin(std::sqrt(r2));
        const double den = 1.0 + 0.001 * r2;
        return 0.5 + (sn * sn - 0.5) / (den * den);
    };
    const std::size_t n = x.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += g(x[i], x[(i + 1) % n]);
    return s;
}

double happy_cat(const RealVector& x) {
    const double n = static_cast<double>(x.size());
    double r2 = 0.0, sum = 0.0;
    for (double v : x) {
        r2 += v * v;
        sum += v;
    }
    return std::pow(std::fabs(r2 - n), 0.25) + (0.5 * r2 + sum) / n + 0.5;
}

using PureFn = double (*)(const RealVector&);

std::function<double(const RealVector&, RandomStream*)> pure(PureFn f) {
    return [f](const RealVector& x, RandomStream*) { return f(x); };
}

std::function<double(const RealVector&, RandomStream*)> biased(PureFn f,
                                                               double bias) {
    return [f, bias](const RealVector& x, RandomStream*) { return f(x) + bias; };
}

ObjectiveSpec make(std::string id, std::string name, std::size_t dim,
                   double lo, double hi,
                   std::function<double(const RealVector&, RandomStream*)> fn,
                   std::optional<double> fmin, std::optional<RealVector> argmin,
                   Modality modality, bool scalable, bool stochastic = false) {
    ObjectiveSpec s;
    s.id = std::move(id);
    s.name = std::move(name);
    s.dimension = dim;
    s.bounds = Bounds::uniform(dim, lo, hi);
    s.evaluator = std::move(fn);
    s.known_min = fmin;
    s.known_argmin = std::move(argmin);
    s.modality = modality;
    s.scalable = scalable;
    s.stochastic = stochastic;
    return s;
}

// Per-dimension minimum of Schwefel 2.26 and its location.
constexpr double kSchwefelArg = 420.9687463670506;
constexpr double kSchwefelMinPerDim = -418.9828872724338;

} // namespace

const char* to_string(Modality m) {
    switch (m) {
        case Modality::unimodal: return "unimodal";
        case Modality::multimodal: return "multimodal";
        case Modality::fixed_dimension_multimodal: return "fixed-dim-multimodal";
    }
    return "?";
}

double evaluate(const ObjectiveSpec& spec, const RealVector& x,
                RandomStream* rng) {
    if (x.size() != spec.dimension)
        throw std::invalid_argument("evaluate: input length " +
                                    std::to_string(x.size()) +
                                    " does not match dimension " +
                                    std::to_string(spec.dimension) + " of " +
                                    spec.id);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < spec.bounds.lower[i] || x[i] > spec.bounds.upper[i])
            throw std::invalid_argument("evaluate: component " +
                                        std::to_string(i) +
                                        " outside bounds of " + spec.id);
    if (spec.stochastic && rng == nullptr)
        throw std::invalid_argument("evaluate: " + spec.id +
                                    " is stochastic and requires a random stream");
    return spec.evaluator(x, rng);
}

ObjectiveSpec classical_function(std::size_t index,
                                 std::optional<std::size_t> dim) {
    const bool fixed = index >= 14;
    if (dim && fixed)
        throw std::invalid_argument("classical F" + std::to_string(index) +
                                    " has a fixed dimension");
    const std::size_t n = dim.value_or(30);
    using M = Modality;
    switch (index) {
        case 1:
            return make("F1", "Sphere", n, -100, 100, pure(sphere), 0.0,
                        RealVector(n, 0.0), M::unimodal, true);
        case 2:
            return make("F2", "Schwefel 2.22", n, -10, 10, pure(schwefel_2_22),
                        0.0, RealVector(n, 0.0), M::unimodal, true);
        case 3:
            return make("F3", "Schwefel 1.2", n, -100, 100, pure(schwefel_1_2),
                        0.0, RealVector(n, 0.0), M::unimodal, true);
        case 4:
            return make("F4", "Schwefel 2.21", n, -100, 100, pure(schwefel_2_21),
                        0.0, RealVector(n, 0.0), M::unimodal, true);
        case 5:
            return make("F5", "Rosenbrock", n, -30, 30, pure(rosenbrock), 0.0,
                        RealVector(n, 1.0), M::unimodal, true);
        case 6:
            return make("F6", "Step", n, -100, 100, pure(step), 0.0,
                        RealVector(n, 0.0), M::unimodal, true);
        case 7:
            return make("F7", "Noisy quartic", n, -1.28, 1.28,
                        [](const RealVector& x, RandomStream* rng) {
                            return quartic_noise(x, *rng);
                        },
                        0.0, std::nullopt, M::unimodal, true, true);
        case 8:
            return make("F8", "Schwefel 2.26", n, -500, 500, pure(schwefel_2_26),
                        kSchwefelMinPerDim * static_cast<double>(n),
                        RealVector(n, kSchwefelArg), M::multimodal, true);
        case 9:
            return make("F9", "Rastrigin", n, -5.12, 5.12, pure(rastrigin), 0.0,
                        RealVector(n, 0.0), M::multimodal, true);
        case 10:
            return make("F10", "Ackley", n, -32, 32, pure(ackley), 0.0,
                        RealVector(n, 0.0), M::multimodal, true);
        case 11:
            return make("F11", "Griewank", n, -600, 600, pure(griewank), 0.0,
                        RealVector(n, 0.0), M::multimodal, true);
        case 12:
            return make("F12", "Penalized 1", n, -50, 50, pure(penalized_1), 0.0,
                        RealVector(n, -1.0), M::multimodal, true);
        case 13:
            return make("F13", "Penalized 2", n, -50, 50, pure(penalized_2), 0.0,
                        RealVector(n, 1.0), M::multimodal, true);
        case 14:
            return make("F14", "Shekel foxholes", 2, -65, 65, pure(foxholes),
                        0.9980038377944498,
                        RealVector{-31.97833337797648, -31.978334007870856},
                        M::fixed_dimension_multimodal, false);
        case 15:
            return make("F15", "Kowalik", 4, -5, 5, pure(kowalik),
                        0.0003074859878056054,
                        RealVector{0.19283345267974872, 0.1908362373090203,
                                   0.1231172923128753, 0.13576598922143462},
                        M::fixed_dimension_multimodal, false);
        case 16:
            return make("F16", "Six-hump camel", 2, -5, 5, pure(six_hump_camel),
                        -1.0316284534898776,
                        RealVector{0.08984201492945389, -0.712656402369394},
                        M::fixed_dimension_multimodal, false);
        case 17:
            return make("F17", "Branin", 2, -5, 5, pure(branin),
                        0.39788735772973816, RealVector{kPi, 2.275},
                        M::fixed_dimension_multimodal, false);
        case 18:
            return make("F18", "Goldstein-Price", 2, -2, 2, pure(goldstein_price),
                        3.0, RealVector{0.0, -1.0},
                        M::fixed_dimension_multimodal, false);
        case 19:
            // Domain of the standard Hartmann 3 definition; the published
            // minimum -3.8628 is attained inside [0,1]^3.
            return make("F19", "Hartmann 3", 3, 0, 1, pure(hartmann3),
                        -3.8627821478207554,
                        RealVector{0.11461433654805793, 0.5556488495457383,
                                   0.8525469525477655},
                        M::fixed_dimension_multimodal, false);
        case 20:
            return make("F20", "Hartmann 6", 6, 0, 1, pure(hartmann6),
                        -3.322368011415515,
                        RealVector{0.20168951011534278, 0.15001069271198243,
                                   0.4768739807292697, 0.2753324306183066,
                                   0.3116516166017299, 0.6573005340667769},
                        M::fixed_dimension_multimodal, false);
        case 21:
            return make("F21", "Shekel 5", 4, 0, 10,
                        pure(+[](const RealVector& x) { return shekel(x, 5); }),
                        -10.153199679058229,
                        RealVector{4.000037152376549, 4.000133278657566,
                                   4.000037151057555, 4.000133277090425},
                        M::fixed_dimension_multimodal, false);
        case 22:
            return make("F22", "Shekel 7", 4, 0, 10,
                        pure(+[](const RealVector& x) { return shekel(x, 7); }),
                        -10.402940566818664,
                        RealVector{4.00057291611626, 4.000689367181722,
                                   3.9994897107938447, 3.9996061600067923},
                        M::fixed_dimension_multimodal, false);
        case 23:
            return make("F23", "Shekel 10", 4, 0, 10,
                        pure(+[](const RealVector& x) { return shekel(x, 10); }),
                        -10.536409816692046,
                        RealVector{4.000746533201553, 4.000592934538832,
                                   3.9996633972202558, 3.9995098012852255},
                        M::fixed_dimension_multimodal, false);
        default:
            throw std::invalid_argument("classical_function: index must be 1..23");
    }
}

ObjectiveSpec cec2019_function(std::size_t index,
                               std::optional<std::size_t> dim) {
    const bool fixed = index <= 3;
    if (dim && fixed)
        throw std::invalid_argument("cec2019 F" + std::to_string(index) +
                                    " has a fixed dimension");
    const std::size_t n = dim.value_or(10);
    using M = Modality;
    switch (index) {
        case 1: {
            // Coefficients of the degree-8 Chebyshev polynomial.
            RealVector argmin{128, 0, -256, 0, 160, 0, -32, 0, 1};
            return make("F1", "Storn's Chebyshev polynomial fitting", 9, -8192,
                        8192, biased(chebyshev, 1.0), 1.0, std::move(argmin),
                        M::multimodal, false);
        }
        case 2: {
            // Row-major inverse of the 4x4 Hilbert matrix.
            RealVector argmin{16,   -120,  240,   -140,  -120, 1200,
                              -2700, 1680, 240,   -2700, 6480, -4200,
                              -140,  1680, -4200, 2800};
            return make("F2", "Inverse Hilbert matrix", 16, -16384, 16384,
                        biased(inverse_hilbert, 1.0), 1.0, std::move(argmin),
                        M::multimodal, false);
        }
        case 3:
            return make("F3", "Lennard-Jones minimum energy cluster", 18, -4, 4,
                        biased(lennard_jones, 1.0), 1.0, std::nullopt,
                        M::multimodal, false);
        case 4:
            return make("F4", "Rastrigin", n, -100, 100, biased(rastrigin, 1.0),
                        1.0, RealVector(n, 0.0), M::multimodal, true);
        case 5:
            return make("F5", "Griewank", n, -100, 100, biased(griewank, 1.0),
                        1.0, RealVector(n, 0.0), M::multimodal, true);
        case 6:
            return make("F6", "Weierstrass", n, -100, 100,
                        biased(weierstrass, 1.0), 1.0, RealVector(n, 0.0),
                        M::multimodal, true);
        case 7:
            return make("F7", "Modified Schwefel", n, -100, 100,
                        biased(modified_schwefel, 1.0), 1.0, RealVector(n, 0.0),
                        M::multimodal, true);
        case 8:
            return make("F8", "Expanded Schaffer F6", n, -100, 100,
                        biased(expanded_schaffer6, 1.0), 1.0, RealVector(n, 0.0),
                        M::multimodal, true);
        case 9:
            return make("F9", "Happy Cat", n, -100, 100, biased(happy_cat, 1.0),
                        1.0, RealVector(n, -1.0), M::multimodal, true);
        case 10:
            return make("F10", "Ackley", n, -100, 100, biased(ackley, 1.0), 1.0,
                        RealVector(n, 0.0), M::multimodal, true);
        default:
            throw std::invalid_argument("cec2019_function: index must be 1..10");
    }
}

std::vector<ObjectiveSpec> classical_suite() {
    std::vector<ObjectiveSpec> out;
    out.reserve(23);
    for (std::size_t i = 1; i <= 23; ++i) out.push_back(classical_function(i));
    return out;
}

std::vector<ObjectiveSpec> cec2019_suite() {
    std::vector<ObjectiveSpec> out;
    out.reserve(10);
    for (std::size_t i = 1; i <= 10; ++i) out.push_back(cec2019_function(i));
    return out;
}

ObjectiveSpec shifted_wrap(const ObjectiveSpec& base, const TransformData& t) {
    if (t.dimension != base.dimension)
        throw std::invalid_argument(
            "shifted_wrap: transform dimension " + std::to_string(t.dimension) +
            " does not match objective dimension " +
            std::to_string(base.dimension));
    ObjectiveSpec out = base;
    out.id = base.id + "-shifted";
    out.name = "Shifted " + base.name;
    out.known_min.reset();
    out.known_argmin.reset();
    out.scalable = false;
    auto inner = base.evaluator;
    const RealVector shift = t.shift;
    const auto rotation = t.rotation;
    const double bias = t.bias;
    const std::size_t dim = t.dimension;
    out.evaluator = [inner, shift, rotation, bias,
                     dim](const RealVector& x, RandomStream* rng) {
        RealVector z(dim);
        for (std::size_t i = 0; i < dim; ++i) z[i] = x[i] - shift[i];
        if (rotation) {
            RealVector rz(dim, 0.0);
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = 0; c < dim; ++c)
                    rz[r] += (*rotation)[r][c] * z[c];
            z.swap(rz);
        }
        return inner(z, rng) + bias;
    };
    return out;
}

TransformData load_transform_data(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("transform data: cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("transform data: malformed JSON in " + path +
                                 ": " + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("transform data: top level must be an object");
    for (const char* field : {"dim", "shift", "bias"})
        if (!j.contains(field))
            throw std::runtime_error(std::string("transform data: missing field: ") +
                                     field);
    TransformData t;
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
        throw std::runtime_error("transform data: dim must be a positive integer");
    t.dimension = j["dim"].get<std::size_t>();
    if (!j["shift"].is_array())
        throw std::runtime_error("transform data: shift must be an array");
    t.shift = j["shift"].get<RealVector>();
    if (t.shift.size() != t.dimension)
        throw std::runtime_error("transform data: shift length " +
                                 std::to_string(t.shift.size()) +
                                 " does not match dim " +
                                 std::to_string(t.dimension));
    for (double v : t.shift)
        if (!std::isfinite(v))
            throw std::runtime_error("transform data: shift has a non-finite entry");
    if (!j["bias"].is_number())
        throw std::runtime_error("transform data: bias must be a number");
    t.bias = j["bias"].get<double>();
    if (j.contains("rotation")) {
        if (!j["rotation"].is_array())
            throw std::runtime_error("transform data: rotation must be an array of rows");
        std::vector<RealVector> rot;
        for (const auto& row : j["rotation"]) {
            if (!row.is_array())
                throw std::runtime_error("transform data: rotation rows must be arrays");
            rot.push_back(row.get<RealVector>());
        }
        if (rot.size() != t.dimension)
            throw std::runtime_error("transform data: rotation has " +
                                     std::to_string(rot.size()) +
                                     " rows, expected " +
                                     std::to_string(t.dimension));
        for (std::size_t r = 0; r < rot.size(); ++r) {
            if (rot[r].size() != t.dimension)
                throw std::runtime_error("transform data: rotation row " +
                                         std::to_string(r) + " has " +
                                         std::to_string(rot[r].size()) +
                                         " entries, expected " +
                                         std::to_string(t.dimension));
            for (double v : rot[r])
                if (!std::isfinite(v))
                    throw std::runtime_error(
                        "transform data: rotation has a non-finite entry");
        }
        t.rotation = std::move(rot);
    }
    return t;
}

const std::vector<Cec2005Entry>& cec2005_catalog() {
    static const std::vector<Cec2005Entry> catalog = {
        {1, "Shifted sphere", -450, -100, 100, {10, 30, 50}},
        {2, "Shifted Schwefel 1.2", -450, -100, 100, {10, 30, 50}},
        {3, "Shifted rotated high conditioned elliptic", -450, -100, 100, {10, 30, 50}},
        {4, "Shifted Schwefel 1.2 with noise in fitness", -450, -100, 100, {10, 30, 50}},
        {5, "Schwefel 2.6 with global optimum on bounds", -310, -100, 100, {10, 30, 50}},
        {6, "Shifted Rosenbrock", 390, -100, 100, {10, 30, 50}},
        {7, "Shifted rotated Griewank without bounds", -180, 0, 600, {10, 30, 50}},
        {8, "Shifted rotated Ackley with global optimum on bounds", -140, -32, 32, {10, 30, 50}},
        {9, "Shifted Rastrigin", -330, -5, 5, {10, 30, 50}},
        {10, "Shifted rotated Rastrigin", -330, -5, 5, {10, 30, 50}},
        {11, "Shifted rotated Weierstrass", 90, -0.5, 0.5, {10, 30, 50}},
        {12, "Schwefel 2.13", -460, -3.14159265358979, 3.14159265358979, {10, 30, 50}},
        {13, "Expanded extended Griewank plus Rosenbrock (F8F2)", -130, -3, 1, {10, 30, 50}},
        {14, "Shifted rotated expanded Schaffer F6", -300, -100, 100, {10, 30, 50}},
        {15, "Hybrid composition", 120, -5, 5, {10, 30, 50}},
        {16, "Rotated hybrid composition", 120, -5, 5, {10, 30, 50}},
        {17, "Rotated hybrid composition with noise in fitness", 120, -5, 5, {10, 30, 50}},
        {18, "Rotated hybrid composition", 10, -5, 5, {10, 30, 50}},
        {19, "Rotated hybrid composition with a narrow basin", 10, -5, 5, {10, 30, 50}},
        {20, "Rotated hybrid composition with optimum on bounds", 10, -5, 5, {10, 30, 50}},
        {21, "Rotated hybrid composition", 360, -5, 5, {10, 30, 50}},
        {22, "Rotated hybrid composition with high condition number", 360, -5, 5, {10, 30, 50}},
        {23, "Noncontinuous rotated hybrid composition", 360, -5, 5, {10, 30, 50}},
        {24, "Rotated hybrid composition", 260, -5, 5, {10, 30, 50}},
        {25, "Rotated hybrid composition without bounds", 260, 2, 5, {10, 30, 50}},
    };
    return catalog;
}

} // namespace swarmopt
