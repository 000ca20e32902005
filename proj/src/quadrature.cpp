#include "decoshell/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <vector>

namespace decoshell::quad {

namespace {

// QUADPACK qk21 abscissae/weights
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr int kNodes = 21;

struct Interval {
    double a, b, value, err;
};

// node order: center, then (+x_j, -x_j) for j = 0..9
void fill_nodes(double a, double b, double* out) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    out[0] = c;
    for (int j = 0; j < 10; ++j) {
        out[1 + 2 * j] = c + h * kXgk[j];
        out[2 + 2 * j] = c - h * kXgk[j];
    }
}

Interval apply_rule(double a, double b, const double* fv) {
    const double h = 0.5 * (b - a);
    const double fc = fv[0];
    double resk = kWgk[10] * fc;
    double resg = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double pair = fv[1 + 2 * j] + fv[2 + 2 * j];
        resk += kWgk[j] * pair;
        if (j % 2 == 1) resg += kWg[j / 2] * pair;
    }
    const double reskh = 0.5 * resk;
    double resabs = kWgk[10] * std::abs(fc);
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resabs += kWgk[j] * (std::abs(fv[1 + 2 * j]) + std::abs(fv[2 + 2 * j]));
        resasc += kWgk[j] * (std::abs(fv[1 + 2 * j] - reskh) + std::abs(fv[2 + 2 * j] - reskh));
    }
    const double habs = std::abs(h);
    resabs *= habs;
    resasc *= habs;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    if (resabs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return {a, b, resk * h, err};
}

void evaluate(const Integrand& f, std::vector<double>& x, std::vector<double>& fx, ExecPolicy exec) {
    const long n = static_cast<long>(x.size());
    fx.resize(x.size());
    if (exec == ExecPolicy::parallel && n > 1) {
        // exceptions must not cross the OpenMP region boundary
        std::exception_ptr first;
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) {
            try {
                fx[i] = f(x[i]);
            } catch (...) {
#pragma omp critical(decoshell_quad_error)
                if (!first) first = std::current_exception();
            }
        }
        if (first) std::rethrow_exception(first);
    } else {
        for (long i = 0; i < n; ++i) fx[i] = f(x[i]);
    }
}

bool by_error(const Interval& l, const Interval& r) { return l.err < r.err; }

}  // namespace

double kronrod21(const Integrand& f, double a, double b, double* abs_err) {
    std::array<double, kNodes> x{}, fx{};
    fill_nodes(a, b, x.data());
    for (int i = 0; i < kNodes; ++i) fx[i] = f(x[i]);
    const Interval iv = apply_rule(a, b, fx.data());
    if (abs_err) *abs_err = iv.err;
    return iv.value;
}

Result gauss_kronrod(const Integrand& f, std::span<const double> points, const Options& opt) {
    Result res;
    std::vector<std::pair<double, double>> pieces;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i + 1] > points[i]) pieces.emplace_back(points[i], points[i + 1]);
    if (pieces.empty()) return res;

    std::vector<double> x, fx;
    x.resize(pieces.size() * kNodes);
    for (std::size_t i = 0; i < pieces.size(); ++i) fill_nodes(pieces[i].first, pieces[i].second, &x[i * kNodes]);
    evaluate(f, x, fx, opt.exec);
    res.n_evals = x.size();

    std::vector<Interval> heap;
    heap.reserve(256);
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        heap.push_back(apply_rule(pieces[i].first, pieces[i].second, &fx[i * kNodes]));
        total += heap.back().value;
        total_err += heap.back().err;
    }
    std::make_heap(heap.begin(), heap.end(), by_error);

    constexpr double eps = std::numeric_limits<double>::epsilon();
    x.resize(2 * kNodes);
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (res.n_evals + 2 * kNodes > opt.max_evals) {
            res.status = Status::max_evals;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Interval worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) < 100.0 * eps * (std::abs(worst.a) + std::abs(worst.b))) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            res.status = Status::roundoff;
            break;
        }
        fill_nodes(worst.a, mid, &x[0]);
        fill_nodes(mid, worst.b, &x[kNodes]);
        evaluate(f, x, fx, opt.exec);
        res.n_evals += 2 * kNodes;
        const Interval left = apply_rule(worst.a, mid, &fx[0]);
        const Interval right = apply_rule(mid, worst.b, &fx[kNodes]);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
    }

    // ordered final sum, independent of heap layout
    std::sort(heap.begin(), heap.end(), [](const Interval& l, const Interval& r) { return l.a < r.a; });
    res.value = 0.0;
    res.abs_err = 0.0;
    for (const Interval& iv : heap) {
        res.value += iv.value;
        res.abs_err += iv.err;
    }
    return res;
}

}  // namespace decoshell::quad
