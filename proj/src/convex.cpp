#include "planks/convex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "planks/rng.hpp"

namespace planks {

namespace {

// Reusable Dykstra state: one increment per set (halfspaces first, ball last).
// Only entries touched in the previous call are reset, so a call is O(active).
struct DykstraScratch {
    std::vector<Vec3> increments;
    std::vector<int> touched;

    void reset(int sets) {
        if (static_cast<int>(increments.size()) < sets) increments.resize(sets);
        for (int i : touched) increments[i] = Vec3{};
        touched.clear();
    }

    Vec3& touch(int i) {
        if (increments[i] == Vec3{}) touched.push_back(i);
        return increments[i];
    }
};

thread_local DykstraScratch tls_scratch;

Vec3 project_ball(const Vec3& p) {
    const double n2 = norm2(p);
    if (n2 <= 1.0) return p;
    return p * (1.0 / std::sqrt(n2));
}

Vec3 project_halfspace(const Vec3& p, const Halfspace& h) {
    const double viol = dot(p, h.normal.vec()) - h.offset;
    if (viol <= 0.0) return p;
    return p - h.normal.vec() * viol;
}

}  // namespace

ProjectionResult project_region(const Vec3& p, const ConvexRegion& k, double tol, int max_iter) {
    const auto& cons = k.constraints();
    const int m = static_cast<int>(cons.size());

    if (k.contains(p, 0.0)) return {p, {0, 0.0, true}};

    DykstraScratch& scratch = tls_scratch;
    scratch.reset(m + 1);

    Vec3 x = p;
    double residual = 0.0;
    // Stopping rule after Birgin & Raydan: the summed squared change of the
    // increments over one full cycle bounds the progress still available.
    for (int cycle = 1; cycle <= max_iter; ++cycle) {
        double ck = 0.0;
        for (int j = 0; j < m; ++j) {
            const Vec3& inc = scratch.increments[j];
            const bool had_inc = !(inc == Vec3{});
            const Vec3 y = had_inc ? x + inc : x;
            const double viol = dot(y, cons[j].normal.vec()) - cons[j].offset;
            if (viol <= 0.0) {
                if (had_inc) {
                    ck += norm2(inc);
                    scratch.increments[j] = Vec3{};
                }
                x = y;
            } else {
                const Vec3 xnew = y - cons[j].normal.vec() * viol;
                const Vec3 incnew = y - xnew;
                ck += norm2(incnew - inc);
                scratch.touch(j) = incnew;
                x = xnew;
            }
        }
        {
            const Vec3& inc = scratch.increments[m];
            const bool had_inc = !(inc == Vec3{});
            const Vec3 y = had_inc ? x + inc : x;
            const Vec3 xnew = project_ball(y);
            const Vec3 incnew = y - xnew;
            ck += norm2(incnew - inc);
            if (had_inc || !(incnew == Vec3{})) scratch.touch(m) = incnew;
            x = xnew;
        }
        residual = std::sqrt(ck);
        if (residual <= tol) return {x, {cycle, residual, true}};
    }
    return {x, {max_iter, residual, false}};
}

double distance_to_region(const Vec3& p, const ConvexRegion& k, double tol, int max_iter,
                          ConvergenceReport* report) {
    const ProjectionResult r = project_region(p, k, tol, max_iter);
    if (report) *report = r.report;
    return norm(p - r.point);
}

SupportResult support_value(const ConvexRegion& k, const UnitVector& direction, double tol,
                            int max_iter, const Vec3* warm_start) {
    const Vec3 c = direction.vec();
    constexpr double kStep = 0.1;

    // A stale warm start (e.g. after a change of direction) can be worse than
    // starting at the projection of the objective direction itself; take the
    // better of the two.
    ProjectionResult start = project_region(c, k, tol, max_iter);
    if (warm_start) {
        const ProjectionResult w = project_region(*warm_start, k, tol, max_iter);
        if (dot(w.point, c) > dot(start.point, c)) start = w;
    }
    if (!start.report.converged && !k.contains(start.point, 1e-6)) {
        throw EmptyRegionError("support_value: cannot restore feasibility; region may be empty");
    }

    Vec3 x = start.point;
    double best = dot(x, c);
    Vec3 best_x = x;
    std::vector<Vec3> history;
    history.reserve(1024);
    history.push_back(x);

    // Fixed-point condition of projected ascent: x maximizes x.c over K iff
    // x = P_K(x + step*c). Movement below tau for a few consecutive steps
    // pins the support value to within tol (movement ~ step*angle near a
    // smooth cap, value error ~ angle^2/2).
    const double tau = std::max(kStep * std::sqrt(2.0 * tol) / (1.0 + kStep), 1e-13);
    int calm = 0;
    int iter = 0;
    bool converged = false;
    double movement = 0.0;
    for (iter = 1; iter <= max_iter; ++iter) {
        const ProjectionResult step = project_region(x + c * kStep, k, tol, max_iter);
        movement = norm(step.point - x);
        x = step.point;
        history.push_back(x);
        const double v = dot(x, c);
        if (v > best) {
            best = v;
            best_x = x;
        }
        calm = movement <= tau ? calm + 1 : 0;
        if (calm >= 3) {
            converged = true;
            break;
        }
    }

    // Tail averaging over the last fifth of the trajectory; the averaged
    // point is re-projected to keep the witness feasible.
    const std::size_t tail = std::max<std::size_t>(1, history.size() / 5);
    Vec3 avg{};
    for (std::size_t i = history.size() - tail; i < history.size(); ++i) avg += history[i];
    avg = avg * (1.0 / static_cast<double>(tail));
    const ProjectionResult avg_proj = project_region(avg, k, tol, max_iter);
    const double avg_v = dot(avg_proj.point, c);
    if (avg_v > best) {
        best = avg_v;
        best_x = avg_proj.point;
    }

    return {best, best_x, {iter, movement, converged}};
}

namespace {

// Inscribed-ball slack at x: distance to the nearest boundary among the ball
// and all constraint planes. Exact, O(m).
double slack(const ConvexRegion& k, const Vec3& x) {
    double g = 1.0 - norm(x);
    for (const Halfspace& h : k.constraints()) {
        g = std::min(g, h.offset - dot(x, h.normal.vec()));
    }
    return g;
}

// Ascent direction at x: move away from the most binding boundary.
Vec3 slack_subgradient(const ConvexRegion& k, const Vec3& x) {
    double g = 1.0 - norm(x);
    Vec3 dir = norm2(x) > 1e-24 ? x * (-1.0 / norm(x)) : Vec3{};
    for (const Halfspace& h : k.constraints()) {
        const double s = h.offset - dot(x, h.normal.vec());
        if (s < g) {
            g = s;
            dir = -h.normal.vec();
        }
    }
    return dir;
}

void ascend(const ConvexRegion& k, Vec3 x, int iters, double step0, double& best, Vec3& best_x) {
    double gx = slack(k, x);
    if (gx > best) {
        best = gx;
        best_x = x;
    }
    for (int t = 1; t <= iters; ++t) {
        const Vec3 d = slack_subgradient(k, x);
        if (d == Vec3{}) break;  // interior optimum of the ball term
        x += d * (step0 / std::sqrt(static_cast<double>(t)));
        gx = slack(k, x);
        if (gx > best) {
            best = gx;
            best_x = x;
        }
    }
}

// Compass polish: halving pattern search over a fixed direction set. Keeps
// the never-overestimate property since only exact slack values are compared.
void polish(const ConvexRegion& k, double& best, Vec3& best_x) {
    std::vector<Vec3> dirs;
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dz = -1; dz <= 1; ++dz) {
                if (dx == 0 && dy == 0 && dz == 0) continue;
                const Vec3 d{static_cast<double>(dx), static_cast<double>(dy),
                             static_cast<double>(dz)};
                dirs.push_back(d * (1.0 / norm(d)));
            }
    double step = 0.25;
    while (step > 1e-13) {
        bool improved = false;
        for (const Vec3& d : dirs) {
            const Vec3 cand = best_x + d * step;
            const double g = slack(k, cand);
            if (g > best) {
                best = g;
                best_x = cand;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
}

}  // namespace

double inner_slack(const ConvexRegion& k, const Vec3& x) { return slack(k, x); }

Vec3 improve_center(const ConvexRegion& k, const Vec3& x, int iters) {
    double best = slack(k, x);
    Vec3 best_x = x;
    ascend(k, x, iters, 0.25, best, best_x);
    return best_x;
}

InnerRadiusResult inner_radius(const ConvexRegion& k, const Vec3* warm_start) {
    double best = slack(k, Vec3{});
    Vec3 best_x{};

    constexpr int kIters = 1200;
    ascend(k, Vec3{}, kIters, 0.5, best, best_x);
    if (warm_start) ascend(k, *warm_start, kIters, 0.25, best, best_x);
    for (int axis = 0; axis < 3; ++axis) {
        for (double s : {-0.5, 0.5}) {
            Vec3 x{};
            (axis == 0 ? x.x : axis == 1 ? x.y : x.z) = s;
            ascend(k, x, kIters, 0.5, best, best_x);
        }
    }
    Rng rng(0x9A3C5E1D2B4F6071ull);  // fixed stream: starts are deterministic
    for (int i = 0; i < 8; ++i) {
        ascend(k, sample_unit_ball(rng) * 0.9, kIters, 0.5, best, best_x);
    }

    polish(k, best, best_x);
    return {best, best_x, {kIters, 0.0, true}};
}

bool is_empty(const ConvexRegion& k, double tol_empty, const Vec3* warm_start, Vec3* center_out) {
    const InnerRadiusResult r = inner_radius(k, warm_start);
    if (center_out) *center_out = r.center;
    return r.value < tol_empty;
}

}  // namespace planks
