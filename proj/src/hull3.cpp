#include "overlap/detail/hull3.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace overlap::detail {

namespace {

struct V3 {
  Wide x, y, z;
};

V3 sub(const P3& a, const P3& b) { return {Wide(a.x - b.x), Wide(a.y - b.y), Wide(a.z - b.z)}; }
V3 cross(const V3& a, const V3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Wide dot(const V3& a, const V3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool is_zero(const V3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

int bits(unsigned __int128 v) {
  int b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

struct Face {
  int v[3];
  int nb[3];
  V3 n;
  bool alive = true;
  std::vector<int> conf;
};

class Hull3 {
 public:
  Hull3(const std::vector<P3>& q, std::uint64_t& ops) : q_(q), ops_(ops) {}

  bool visible(const Face& f, int p) {
    ++ops_;
    return dot(f.n, sub(q_[p], q_[f.v[0]])) > 0;
  }

  int make_face(int a, int b, int c) {
    Face f;
    f.v[0] = a;
    f.v[1] = b;
    f.v[2] = c;
    f.nb[0] = f.nb[1] = f.nb[2] = -1;
    f.n = cross(sub(q_[b], q_[a]), sub(q_[c], q_[a]));
    faces_.push_back(std::move(f));
    return int(faces_.size()) - 1;
  }

  void run(int i0, int i1, int i2, int i3, std::vector<int> rest, std::uint64_t seed) {
    int L = int(q_.size());
    int tet[4] = {i0, i1, i2, i3};
    static const int combos[4][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 3, 1}, {1, 2, 3, 0}};
    for (const auto& c : combos) {
      int a = tet[c[0]], b = tet[c[1]], d = tet[c[2]], opp = tet[c[3]];
      V3 n = cross(sub(q_[b], q_[a]), sub(q_[d], q_[a]));
      if (dot(n, sub(q_[opp], q_[a])) > 0) std::swap(b, d);
      make_face(a, b, d);
    }
    std::map<std::pair<int, int>, std::pair<int, int>> edges;
    for (int f = 0; f < 4; ++f)
      for (int e = 0; e < 3; ++e) edges[{faces_[f].v[e], faces_[f].v[(e + 1) % 3]}] = {f, e};
    for (int f = 0; f < 4; ++f)
      for (int e = 0; e < 3; ++e) faces_[f].nb[e] = edges.at({faces_[f].v[(e + 1) % 3], faces_[f].v[e]}).first;

    std::mt19937_64 rng(seed);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<std::vector<int>> pconf(L);
    for (int p : rest)
      for (int f = 0; f < 4; ++f)
        if (visible(faces_[f], p)) {
          faces_[f].conf.push_back(p);
          pconf[p].push_back(f);
        }

    std::vector<char> done(L, 0);
    std::vector<int> vismark, seen(L, -1), start_face(L, -1), end_face(L, -1);
    struct Hz {
      int a, b, f, g;
    };
    std::vector<int> vis;
    std::vector<Hz> hz;
    int iter = 0;
    for (int p : rest) {
      ++iter;
      done[p] = 1;
      vis.clear();
      for (int f : pconf[p])
        if (faces_[f].alive) vis.push_back(f);
      pconf[p].clear();
      pconf[p].shrink_to_fit();
      if (vis.empty()) continue;
      if (vismark.size() < faces_.size()) vismark.resize(faces_.size() * 2 + 8, 0);
      for (int f : vis) vismark[f] = iter;
      hz.clear();
      for (int f : vis)
        for (int e = 0; e < 3; ++e) {
          int g = faces_[f].nb[e];
          if (vismark[g] != iter) hz.push_back({faces_[f].v[e], faces_[f].v[(e + 1) % 3], f, g});
        }
      std::vector<int> created;
      created.reserve(hz.size());
      for (const Hz& h : hz) {
        int nf = make_face(h.a, h.b, p);
        created.push_back(nf);
        faces_[nf].nb[0] = h.g;
        Face& g = faces_[h.g];
        for (int e = 0; e < 3; ++e)
          if (g.v[e] == h.b && g.v[(e + 1) % 3] == h.a) g.nb[e] = nf;
        start_face[h.a] = nf;
        end_face[h.b] = nf;
      }
      for (size_t k = 0; k < hz.size(); ++k) {
        int nf = created[k];
        faces_[nf].nb[1] = start_face[hz[k].b];
        faces_[nf].nb[2] = end_face[hz[k].a];
        for (int src : {hz[k].f, hz[k].g}) {
          const std::vector<int>& cl = faces_[src].conf;
          for (size_t t = 0; t < cl.size(); ++t) {
            int r = cl[t];
            if (done[r] || seen[r] == nf) continue;
            seen[r] = nf;
            if (visible(faces_[nf], r)) {
              faces_[nf].conf.push_back(r);
              pconf[r].push_back(nf);
            }
          }
        }
      }
      for (int f : vis) {
        faces_[f].alive = false;
        faces_[f].conf.clear();
        faces_[f].conf.shrink_to_fit();
      }
    }
  }

  const std::vector<Face>& faces() const { return faces_; }

 private:
  const std::vector<P3>& q_;
  std::uint64_t& ops_;
  std::vector<Face> faces_;
};

HullGraph finish(const std::vector<int>& ids, const std::vector<std::vector<int>>& local_adj) {
  HullGraph g;
  for (size_t i = 0; i < local_adj.size(); ++i) {
    if (local_adj[i].empty()) continue;
    g.verts.push_back(ids[i]);
    std::vector<int> nb;
    for (int j : local_adj[i]) nb.push_back(ids[j]);
    g.adj.push_back(std::move(nb));
  }
  return g;
}

}  // namespace

bool orientation_safe(const std::vector<P3>& pts, const std::vector<int>& ids) {
  if (ids.empty()) return true;
  const P3& o = pts[ids[0]];
  i128 lo[3] = {o.x, o.y, o.z}, hi[3] = {o.x, o.y, o.z};
  for (int i : ids) {
    const P3& p = pts[i];
    i128 c[3] = {p.x, p.y, p.z};
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], c[k]);
      hi[k] = std::max(hi[k], c[k]);
    }
  }
  int total = 0;
  for (int k = 0; k < 3; ++k) {
    if (hi[k] > (i128(1) << 120) || lo[k] < -(i128(1) << 120)) return false;
    total += bits((unsigned __int128)(hi[k] - lo[k]));
  }
  return total <= 248;
}

HullGraph hull_graph(const std::vector<P3>& pts, const std::vector<int>& ids, std::uint64_t seed,
                     std::uint64_t& ops) {
  if (ids.empty()) return {};
  if (!orientation_safe(pts, ids)) throw std::overflow_error("hull coordinates exceed exact predicate range");
  std::vector<P3> q;
  q.reserve(ids.size());
  for (int i : ids) q.push_back(pts[i]);
  int L = int(q.size());
  std::vector<std::vector<int>> adj(L);

  int i1 = -1;
  for (int i = 1; i < L && i1 < 0; ++i)
    if (!(q[i] == q[0])) i1 = i;
  if (i1 < 0) {
    HullGraph g;
    g.verts = {ids[0]};
    g.adj = {{}};
    return g;
  }
  V3 e1 = sub(q[i1], q[0]);
  int i2 = -1;
  V3 nrm{};
  for (int i = 1; i < L && i2 < 0; ++i) {
    ++ops;
    V3 c = cross(e1, sub(q[i], q[0]));
    if (!is_zero(c)) {
      i2 = i;
      nrm = c;
    }
  }
  if (i2 < 0) {
    int lo = 0, hi = 0;
    for (int i = 1; i < L; ++i) {
      if (q[i] < q[lo]) lo = i;
      if (q[hi] < q[i]) hi = i;
    }
    adj[lo].push_back(hi);
    adj[hi].push_back(lo);
    HullGraph g = finish(ids, adj);
    g.dim = 1;
    return g;
  }
  int i3 = -1;
  for (int i = 1; i < L && i3 < 0; ++i) {
    ++ops;
    if (dot(nrm, sub(q[i], q[0])) != 0) i3 = i;
  }
  if (i3 < 0) {
    // planar: project along the dominant normal axis, monotone chain
    Wide ax = abs(nrm.x), ay = abs(nrm.y), az = abs(nrm.z);
    int drop = (ax >= ay && ax >= az) ? 0 : (ay >= az ? 1 : 2);
    struct Q2 {
      i128 a, b;
      int id;
    };
    std::vector<Q2> pp;
    for (int i = 0; i < L; ++i) {
      const P3& p = q[i];
      if (drop == 0) pp.push_back({p.y, p.z, i});
      else if (drop == 1) pp.push_back({p.x, p.z, i});
      else pp.push_back({p.x, p.y, i});
    }
    std::sort(pp.begin(), pp.end(), [](const Q2& u, const Q2& v) { return u.a != v.a ? u.a < v.a : u.b < v.b; });
    ops += std::uint64_t(L);
    auto turn = [](const Q2& o, const Q2& a, const Q2& b) {
      return Wide(a.a - o.a) * Wide(b.b - o.b) - Wide(a.b - o.b) * Wide(b.a - o.a);
    };
    std::vector<Q2> h(2 * pp.size());
    size_t k = 0;
    for (size_t i = 0; i < pp.size(); ++i) {
      while (k >= 2 && turn(h[k - 2], h[k - 1], pp[i]) <= 0) --k;
      h[k++] = pp[i];
    }
    for (size_t i = pp.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && turn(h[k - 2], h[k - 1], pp[i]) <= 0) --k;
      h[k++] = pp[i];
    }
    h.resize(k - 1);
    for (size_t i = 0; i < h.size(); ++i) {
      int a = h[i].id, b = h[(i + 1) % h.size()].id;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    HullGraph g = finish(ids, adj);
    g.dim = 2;
    return g;
  }

  std::vector<int> rest;
  for (int i = 1; i < L; ++i)
    if (i != i1 && i != i2 && i != i3) rest.push_back(i);
  Hull3 hull(q, ops);
  hull.run(0, i1, i2, i3, std::move(rest), seed);
  for (const Face& f : hull.faces()) {
    if (!f.alive) continue;
    for (int e = 0; e < 3; ++e) adj[f.v[e]].push_back(f.v[(e + 1) % 3]);
  }
  HullGraph g = finish(ids, adj);
  g.dim = 3;
  return g;
}

}  // namespace overlap::detail
