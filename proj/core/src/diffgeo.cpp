#include "bour/diffgeo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <thread>
#include <type_traits>
#include <vector>

#include "bour/detail/scalar.hpp"
#include "bour/errors.hpp"

namespace bour {
namespace {

using detail::fp_abs;
using detail::fp_epsilon;
using detail::fp_sqrt;

double to_double(double x) { return x; }
#ifdef BOUR_HAVE_FLOAT128
double to_double(__float128 x) { return static_cast<double>(x); }
#endif

template <typename T>
Vec3 to_vec3(const Vec3T<T>& v) {
  return {to_double(v.x), to_double(v.y), to_double(v.z)};
}

// K and H from assembled form coefficients. det I > 0: spacelike point,
// timelike unit normal (eps = -1); det I < 0: timelike point.
template <typename T>
void curvature_from_forms(T E, T F, T G, T L, T M, T N, T det_i, T& k, T& h) {
  const T det_ii = L * N - M * M;
  const T num = E * N - T(2) * F * M + G * L;
  if (det_i > T(0)) {
    k = -det_ii / det_i;
    h = -num / (T(2) * det_i);
  } else {
    k = det_ii / det_i;
    h = num / (T(2) * det_i);
  }
}

enum NodeStatus : std::uint8_t { kBanded = 0, kDegenerate = 1, kOk = 2 };

struct NodeOut {
  std::uint8_t status = kBanded;
  std::int8_t det_sign = 0;
  bool h_certified = false;
  double h = 0.0, h_noise = 0.0;
  double k_oracle = 0.0;
  double k_rel = -1.0, k_alt_rel = -1.0;  // -1 = no reference available
  double gauss_norm_resid = -1.0;
  Vec3 e_oracle{}, e_closed{};
  bool have_closed_gauss = false;
};

template <typename T>
struct Steps {
  T h1s, h1t;  // first-derivative steps
  T h2s, h2t;  // second-derivative base steps (three Richardson levels)
  // The binary128 path scales steps with the parameter magnitude: on
  // domains like r in [-0.003, 0.003] the immersion's derivatives vary on
  // the scale of r itself, and the wide mantissa leaves plenty of roundoff
  // headroom for small absolute steps.
  bool point_relative = false;
  T scale_s = T(1), scale_t = T(1);
  T cap_s = T(1), cap_t = T(1);  // upper bound for ladder-enlarged steps
};

// One oracle evaluation. Pure; no domain checks here (callers guarantee the
// stencil fits). Tracks the largest coordinate magnitude seen so the noise
// floor model can use it.
template <typename T, typename Fn>
NodeOut evaluate_node(const Fn& eval, T s, T t, const Steps<T>& st,
                      Signature sig, double degeneracy_tol, double h_tol) {
  NodeOut out;
  T xmax = T(0);
  auto probe = [&](T a, T b) {
    Vec3T<T> p = eval(a, b);
    xmax = std::max({xmax, fp_abs(p.x), fp_abs(p.y), fp_abs(p.z)});
    return p;
  };

  T h1s = st.h1s, h1t = st.h1t, h2s = st.h2s, h2t = st.h2t;
  if (st.point_relative) {
    const T rs = std::max(fp_abs(s), T(0.02) * st.scale_s) / st.scale_s;
    const T rt = std::max(fp_abs(t), T(0.02) * st.scale_t) / st.scale_t;
    h1s *= rs, h2s *= rs;
    h1t *= rt, h2t *= rt;
  }

  const Vec3T<T> c00 = probe(s, t);

  // First derivatives, Richardson-extrapolated over three levels: any
  // truncation left here propagates into the normal (and thence L, M, N)
  // without the second-derivative spread ever noticing, so it gets the same
  // treatment, with its own measured error bound.
  auto d1 = [&](bool along_s, T h) {
    return along_s ? (probe(s + h, t) - probe(s - h, t)) / (T(2) * h)
                   : (probe(s, t + h) - probe(s, t - h)) / (T(2) * h);
  };
  auto max_comp = [](const Vec3T<T>& v) {
    return std::max({fp_abs(v.x), fp_abs(v.y), fp_abs(v.z)});
  };
  T d1s_spread = T(0), d1t_spread = T(0);
  auto d1_extrapolated = [&](bool along_s, T h, T& spread) {
    const Vec3T<T> a = d1(along_s, T(2) * h);
    const Vec3T<T> b = d1(along_s, h);
    const Vec3T<T> c = d1(along_s, h / T(2));
    const Vec3T<T> r1a = (T(4) * b - a) / T(3);
    const Vec3T<T> r1b = (T(4) * c - b) / T(3);
    spread = max_comp(r1a - r1b) / T(15);
    return (T(16) * r1b - r1a) / T(15);
  };
  const Vec3T<T> xs = d1_extrapolated(true, h1s, d1s_spread);
  const Vec3T<T> xt = d1_extrapolated(false, h1t, d1t_spread);

  const T E = inner(xs, xs, sig);
  const T F = inner(xs, xt, sig);
  const T G = inner(xt, xt, sig);
  const T det_i = E * G - F * F;
  const T gram = fp_abs(E * G) + F * F;

  if (gram == T(0) || fp_abs(det_i) <= T(degeneracy_tol) * gram) {
    out.status = kDegenerate;
    return out;
  }
  out.status = kOk;
  out.det_sign = det_i > T(0) ? 1 : -1;

  const Vec3T<T> n = lorentz_cross(xs, xt, sig);
  // <n,n> = F^2 - EG exactly, so nondegenerate det I means a usable normal.
  const T q_norm = fp_sqrt(fp_abs(inner(n, n, sig)));
  const Vec3T<T> nu = n / q_norm;
  out.e_oracle = to_vec3(nu);

  const T eps = fp_epsilon<T>();
  const T amp = fp_sqrt(euclidean_norm2(nu));
  const T norm_xs = fp_sqrt(euclidean_norm2(xs));
  const T norm_xt = fp_sqrt(euclidean_norm2(xt));
  // Residual first-derivative error: measured spread plus roundoff floor.
  const T d1s = d1s_spread + T(4) * eps * xmax / h1s;
  const T d1t = d1t_spread + T(4) * eps * xmax / h1t;
  const T dE = T(4) * d1s * norm_xs;
  const T dG = T(4) * d1t * norm_xt;
  const T dF = T(2) * (d1s * norm_xt + d1t * norm_xs);
  // Error of the unit normal; the (1 + amp^2) factor accounts for the
  // ill-conditioned normalization of nearly lightlike normals.
  const T d_nu = (d1s * norm_xt + d1t * norm_xs) / q_norm *
                 (T(1) + amp * amp) * T(2);

  struct Attempt {
    T L, M, N, H, K;
    T noise;
  };

  // Three second-derivative levels (2h, h, h/2) give two first-order
  // Richardson extrapolants; their spread bounds the truncation left in
  // the second-order extrapolant, and the floor models cancellation
  // roundoff at the finest level, pairing each form coefficient with the
  // step of the direction its second derivative uses. The Euclidean size
  // of the unit normal enters because a nearly lightlike normal amplifies
  // the projection of second-difference noise.
  auto attempt = [&](T bs, T bt) -> Attempt {
    T L[3], M[3], N[3];
    T nss = T(0), ntt = T(0), nst = T(0);  // second-derivative magnitudes
    for (int lev = 0; lev < 3; ++lev) {
      const T hs = bs * T(2) / T(1 << lev);
      const T ht = bt * T(2) / T(1 << lev);
      const Vec3T<T> xss =
          (probe(s + hs, t) - T(2) * c00 + probe(s - hs, t)) / (hs * hs);
      const Vec3T<T> xtt =
          (probe(s, t + ht) - T(2) * c00 + probe(s, t - ht)) / (ht * ht);
      const Vec3T<T> xst =
          (probe(s + hs, t + ht) - probe(s + hs, t - ht) - probe(s - hs, t + ht) +
           probe(s - hs, t - ht)) /
          (T(4) * hs * ht);
      L[lev] = inner(xss, nu, sig);
      M[lev] = inner(xst, nu, sig);
      N[lev] = inner(xtt, nu, sig);
      if (lev == 2) {
        nss = fp_sqrt(euclidean_norm2(xss));
        ntt = fp_sqrt(euclidean_norm2(xtt));
        nst = fp_sqrt(euclidean_norm2(xst));
      }
    }
    auto r1 = [](const T* a, int i) { return (T(4) * a[i + 1] - a[i]) / T(3); };
    const T La = r1(L, 0), Lb = r1(L, 1);
    const T Ma = r1(M, 0), Mb = r1(M, 1);
    const T Na = r1(N, 0), Nb = r1(N, 1);
    Attempt at;
    at.L = (T(16) * Lb - La) / T(15);
    at.M = (T(16) * Mb - Ma) / T(15);
    at.N = (T(16) * Nb - Na) / T(15);
    T ha, hb, ka;
    curvature_from_forms(E, F, G, La, Ma, Na, det_i, ka, ha);
    curvature_from_forms(E, F, G, Lb, Mb, Nb, det_i, ka, hb);
    curvature_from_forms(E, F, G, at.L, at.M, at.N, det_i, at.K, at.H);

    const T hs2 = bs / T(2), ht2 = bt / T(2);
    const T round_ss = T(32) * eps * xmax * amp / (hs2 * hs2);  // noise on L
    const T round_tt = T(32) * eps * xmax * amp / (ht2 * ht2);  // noise on N
    const T round_st = T(32) * eps * xmax * amp / (hs2 * ht2);  // noise on M
    const T num_noise = fp_abs(E) * (round_tt + ntt * d_nu) +
                        fp_abs(G) * (round_ss + nss * d_nu) +
                        T(2) * fp_abs(F) * (round_st + nst * d_nu) +
                        fp_abs(at.N) * dE + fp_abs(at.L) * dG +
                        T(2) * fp_abs(at.M) * dF;
    at.noise = fp_abs(hb - ha) / T(15) +
               T(2) * num_noise / (T(2) * fp_abs(det_i));
    return at;
  };

  Attempt best = attempt(h2s, h2t);
  if (!(to_double(best.noise) < 0.2 * h_tol)) {
    // Roundoff-limited: retry with enlarged second-derivative steps (the
    // extrapolation keeps truncation in check) and keep the best bound.
    T pbs = h2s, pbt = h2t;
    for (double mult : {16.0, 256.0}) {
      const T bs = std::min(h2s * T(mult), st.cap_s);
      const T bt = std::min(h2t * T(mult), st.cap_t);
      if (bs == pbs && bt == pbt) break;
      pbs = bs, pbt = bt;
      const Attempt a = attempt(bs, bt);
      if (a.noise < best.noise) best = a;
      if (to_double(best.noise) < 0.2 * h_tol) break;
    }
  }

  out.k_oracle = to_double(best.K);
  out.h = to_double(best.H);
  out.h_noise = to_double(best.noise);
  out.h_certified = out.h_noise < 0.2 * h_tol;
  return out;
}

template <typename T>
Steps<T> make_steps(const SurfacePatch& patch, const OracleConfig& cfg) {
  double f1, f2;
  if constexpr (std::is_same_v<T, double>) {
    f1 = cfg.step;
    f2 = cfg.step2;
  } else {
    // Balance truncation against roundoff for the wider mantissa.
    const double eps = to_double(fp_epsilon<T>());
    f1 = std::pow(eps, 1.0 / 3.0);
    f2 = 2.0 * std::pow(eps, 0.25);
  }
  auto scale = [](const Interval& iv) {
    return std::max({std::abs(iv.lo), std::abs(iv.hi), 1e-12});
  };
  const double ss = scale(patch.s_range), ts = scale(patch.t_range);
  Steps<T> st{T(f1 * ss), T(f1 * ts), T(f2 * ss), T(f2 * ts)};
  st.point_relative = !std::is_same_v<T, double>;
  st.scale_s = T(ss);
  st.scale_t = T(ts);
  st.cap_s = T(0.01 * std::abs(patch.s_range.width()));
  st.cap_t = T(0.01 * std::abs(patch.t_range.width()));
  return st;
}

template <typename T, typename Fn>
ScanReport scan_impl(const SurfacePatch& patch, const Fn& eval, int ns, int nt,
                     const OracleConfig& cfg, Precision used) {
  ScanReport rep;
  rep.surface = patch.name;
  rep.sig = patch.sig;
  rep.ns = ns;
  rep.nt = nt;
  rep.used = used;
  rep.nodes_total = ns * nt;

  const Steps<T> st = make_steps<T>(patch, cfg);
  // Inset covers the widest stencil the ladder may ever use (2x the cap).
  const double pad_s = 3.0 * std::max(to_double(st.h1s), to_double(st.h2s)) +
                       2.2 * to_double(st.cap_s);
  const double pad_t = 3.0 * std::max(to_double(st.h1t), to_double(st.h2t)) +
                       2.2 * to_double(st.cap_t);
  const double s0 = patch.s_range.lo + pad_s, s1 = patch.s_range.hi - pad_s;
  const double t0 = patch.t_range.lo + pad_t, t1 = patch.t_range.hi - pad_t;

  std::vector<NodeOut> nodes(static_cast<std::size_t>(ns) * nt);
  auto param_at = [&](int i, int j) {
    const double s = ns == 1 ? s0 : s0 + (s1 - s0) * i / (ns - 1);
    const double t = nt == 1 ? t0 : t0 + (t1 - t0) * j / (nt - 1);
    return std::pair<double, double>{s, t};
  };

  auto run_rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      for (int j = 0; j < nt; ++j) {
        const auto [s, t] = param_at(i, j);
        NodeOut& out = nodes[static_cast<std::size_t>(i) * nt + j];
        if (patch.in_band(s, t)) {
          out.status = kBanded;
          continue;
        }
        out = evaluate_node<T>(eval, T(s), T(t), st, patch.sig,
                               cfg.degeneracy_tol, cfg.h_tol);
        if (out.status != kOk) continue;
        if (patch.k_closed) {
          const double kc = patch.k_closed(s, t);
          if (std::isfinite(kc))
            out.k_rel = std::abs(out.k_oracle - kc) / std::max(std::abs(kc), 1e-300);
        }
        if (patch.k_alt) {
          const double ka = patch.k_alt(s, t);
          if (std::isfinite(ka))
            out.k_alt_rel = std::abs(out.k_oracle - ka) / std::max(std::abs(ka), 1e-300);
        }
        if (patch.gauss_closed) {
          out.e_closed = patch.gauss_closed(s, t);
          out.have_closed_gauss = true;
          const double expect = patch.sig == Signature::PPM ? -1.0 : 1.0;
          out.gauss_norm_resid =
              std::abs(inner(out.e_closed, out.e_closed, patch.sig) - expect);
        }
      }
    }
  };

  int nthreads = cfg.threads > 0 ? cfg.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp(nthreads, 1, std::max(1, ns));
  if (nthreads == 1) {
    run_rows(0, ns);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (ns + nthreads - 1) / nthreads;
    for (int k = 0; k < nthreads; ++k) {
      const int b = k * chunk, e = std::min(ns, b + chunk);
      if (b < e) pool.emplace_back(run_rows, b, e);
    }
    for (auto& th : pool) th.join();
  }

  // Sequential aggregation: deterministic regardless of thread count.
  for (const NodeOut& n : nodes) {
    switch (n.status) {
      case kBanded: rep.nodes_banded++; break;
      case kDegenerate: rep.nodes_degenerate++; break;
      case kOk: rep.nodes_ok++; break;
    }
    if (n.status != kOk) continue;
    if (n.det_sign > 0) rep.det_pos++;
    else if (n.det_sign < 0) rep.det_neg++;
    else rep.det_zero++;
    rep.min_h_noise = rep.min_h_noise < 0.0 ? n.h_noise
                                            : std::min(rep.min_h_noise, n.h_noise);
    if (n.h_certified) {
      if (rep.nodes_h_certified == 0) {
        rep.sample_k_oracle = n.k_oracle;
      }
      rep.nodes_h_certified++;
      rep.max_abs_h = std::max(rep.max_abs_h, std::abs(n.h));
      rep.max_h_noise = std::max(rep.max_h_noise, n.h_noise);
      if (n.k_rel >= 0.0) rep.max_k_rel = std::max(rep.max_k_rel, n.k_rel);
      if (n.k_alt_rel >= 0.0) {
        rep.max_k_alt_rel = std::max(rep.max_k_alt_rel, n.k_alt_rel);
        rep.min_k_alt_rel = rep.min_k_alt_rel < 0.0
                                ? n.k_alt_rel
                                : std::min(rep.min_k_alt_rel, n.k_alt_rel);
      }
    }
    if (n.gauss_norm_resid >= 0.0)
      rep.max_gauss_norm = std::max(rep.max_gauss_norm, n.gauss_norm_resid);
  }

  // Connected components of ok nodes; one orientation sign per component.
  // Two grid neighbors only count as adjacent when the parameter segment
  // between them stays clear of the singular bands: the normal field may
  // genuinely flip across a locus thinner than one grid cell.
  std::vector<int> comp(nodes.size(), -1);
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(i) * nt + j; };
  auto segment_clear = [&](int ai, int aj, int bi, int bj) {
    const auto [as, at] = param_at(ai, aj);
    const auto [bs, bt] = param_at(bi, bj);
    for (double f : {0.25, 0.5, 0.75})
      if (patch.in_band(as + f * (bs - as), at + f * (bt - at))) return false;
    return true;
  };
  int ncomp = 0;
  std::vector<std::size_t> stack;
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const std::size_t root = idx(i, j);
      if (nodes[root].status != kOk || comp[root] >= 0) continue;
      const int c = ncomp++;
      stack.push_back(root);
      comp[root] = c;
      int sign = 1;
      bool sign_set = false;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        const NodeOut& nc = nodes[cur];
        if (!sign_set && nc.have_closed_gauss) {
          const double d = nc.e_oracle.x * nc.e_closed.x +
                           nc.e_oracle.y * nc.e_closed.y +
                           nc.e_oracle.z * nc.e_closed.z;
          sign = d >= 0.0 ? 1 : -1;
          sign_set = true;
        }
        const int ci = static_cast<int>(cur) / nt, cj = static_cast<int>(cur) % nt;
        const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int ni = ci + di[k], nj = cj + dj[k];
          if (ni < 0 || ni >= ns || nj < 0 || nj >= nt) continue;
          const std::size_t nxt = idx(ni, nj);
          if (nodes[nxt].status != kOk) continue;
          if (!segment_clear(ci, cj, ni, nj)) continue;
          const double d = nodes[cur].e_oracle.x * nodes[nxt].e_oracle.x +
                           nodes[cur].e_oracle.y * nodes[nxt].e_oracle.y +
                           nodes[cur].e_oracle.z * nodes[nxt].e_oracle.z;
          if (d <= 0.0) rep.orientation_coherent = false;
          if (comp[nxt] < 0) {
            comp[nxt] = c;
            stack.push_back(nxt);
          }
        }
      }
      rep.component_signs.push_back(sign);
      // Residuals against the closed-form Gauss map with this sign.
      for (std::size_t q = 0; q < nodes.size(); ++q) {
        if (comp[q] != c || !nodes[q].have_closed_gauss) continue;
        const Vec3 diff = nodes[q].e_oracle - static_cast<double>(sign) * nodes[q].e_closed;
        const double resid =
            std::max({std::abs(diff.x), std::abs(diff.y), std::abs(diff.z)});
        rep.max_gauss_component = std::max(rep.max_gauss_component, resid);
      }
    }
  }

  // Closed-form K at the first certified node, for report context.
  for (int i = 0; i < ns && patch.k_closed; ++i) {
    bool done = false;
    for (int j = 0; j < nt; ++j) {
      const NodeOut& n = nodes[idx(i, j)];
      if (n.status == kOk && n.h_certified) {
        const auto [s, t] = param_at(i, j);
        rep.sample_k_closed = patch.k_closed(s, t);
        done = true;
        break;
      }
    }
    if (done) break;
  }

  return rep;
}

}  // namespace

std::pair<Vec3, Vec3> jacobian(const SurfacePatch& patch, double s, double t,
                               const OracleConfig& cfg) {
  const Steps<double> st = make_steps<double>(patch, cfg);
  if (s - st.h1s < patch.s_range.lo || s + st.h1s > patch.s_range.hi ||
      t - st.h1t < patch.t_range.lo || t + st.h1t > patch.t_range.hi)
    throw DomainError(ErrorKind::DomainEdge, "stencil leaves the patch domain");
  const Vec3 xs = (patch.eval(s + st.h1s, t) - patch.eval(s - st.h1s, t)) / (2.0 * st.h1s);
  const Vec3 xt = (patch.eval(s, t + st.h1t) - patch.eval(s, t - st.h1t)) / (2.0 * st.h1t);
  return {xs, xt};
}

FormSample fundamental_forms(const SurfacePatch& patch, double s, double t,
                             const OracleConfig& cfg) {
  const Steps<double> st = make_steps<double>(patch, cfg);
  const double pad_s = 1.5 * std::max(st.h1s, st.h2s);
  const double pad_t = 1.5 * std::max(st.h1t, st.h2t);
  if (s - pad_s < patch.s_range.lo || s + pad_s > patch.s_range.hi ||
      t - pad_t < patch.t_range.lo || t + pad_t > patch.t_range.hi)
    throw DomainError(ErrorKind::DomainEdge, "stencil leaves the patch domain");

  const NodeOut node = evaluate_node<double>(patch.eval, s, t, st, patch.sig,
                                             cfg.degeneracy_tol, cfg.h_tol);
  if (node.status != kOk)
    throw DomainError(ErrorKind::DegenerateNormal,
                      "first form is degenerate at this point");

  // Re-derive the coefficient values for the caller (evaluate_node keeps
  // only the aggregates it needs).
  const auto [xs, xt] = jacobian(patch, s, t, cfg);
  FormSample out;
  out.E = inner(xs, xs, patch.sig);
  out.F = inner(xs, xt, patch.sig);
  out.G = inner(xt, xt, patch.sig);
  out.det_i = out.E * out.G - out.F * out.F;
  out.gauss = node.e_oracle;

  const auto& ev = patch.eval;
  const Vec3 c00 = ev(s, t);
  auto second = [&](int pass) {
    const double h2s = pass == 0 ? st.h2s : st.h2s / 2;
    const double h2t = pass == 0 ? st.h2t : st.h2t / 2;
    const Vec3 xss = (ev(s + h2s, t) - 2.0 * c00 + ev(s - h2s, t)) / (h2s * h2s);
    const Vec3 xtt = (ev(s, t + h2t) - 2.0 * c00 + ev(s, t - h2t)) / (h2t * h2t);
    const Vec3 xst = (ev(s + h2s, t + h2t) - ev(s + h2s, t - h2t) -
                      ev(s - h2s, t + h2t) + ev(s - h2s, t - h2t)) /
                     (4.0 * h2s * h2t);
    return std::array<double, 3>{inner(xss, node.e_oracle, patch.sig),
                                 inner(xst, node.e_oracle, patch.sig),
                                 inner(xtt, node.e_oracle, patch.sig)};
  };
  const auto c0 = second(0), c1 = second(1);
  out.L = (4.0 * c1[0] - c0[0]) / 3.0;
  out.M = (4.0 * c1[1] - c0[1]) / 3.0;
  out.N = (4.0 * c1[2] - c0[2]) / 3.0;
  out.det_ii = out.L * out.N - out.M * out.M;
  const auto [k, h] = curvatures_numeric(out, patch.sig);
  out.K = k;
  out.H = h;
  out.character = out.det_i > 0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
  return out;
}

std::pair<double, double> curvatures_numeric(const FormSample& sample, Signature) {
  const double det_i = sample.E * sample.G - sample.F * sample.F;
  const double gram = std::abs(sample.E * sample.G) + sample.F * sample.F;
  if (gram == 0.0 || std::abs(det_i) <= 1e-12 * gram)
    throw DomainError(ErrorKind::DegenerateNormal, "det I vanishes here");
  double k, h;
  curvature_from_forms(sample.E, sample.F, sample.G, sample.L, sample.M,
                       sample.N, det_i, k, h);
  return {k, h};
}

ScanReport scan(const SurfacePatch& patch, int ns, int nt,
                const OracleConfig& cfg, Precision precision) {
  if (ns < 2 || nt < 2)
    throw DomainError(ErrorKind::DomainEdge, "scan grid must be at least 2x2");
#ifdef BOUR_HAVE_FLOAT128
  const bool want_quad = precision == Precision::Fp128 ||
                         (precision == Precision::Auto && bool(patch.eval_q));
  if (want_quad && patch.eval_q)
    return scan_impl<__float128>(patch, patch.eval_q, ns, nt, cfg, Precision::Fp128);
#endif
  return scan_impl<double>(patch, patch.eval, ns, nt, cfg, Precision::Fp64);
}

}  // namespace bour
