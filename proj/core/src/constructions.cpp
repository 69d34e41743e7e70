#include "commprob/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace commprob {

namespace {

void check_cap(long long order, const Limits& lim, const char* what) {
  if (order > lim.order_cap)
    throw std::length_error(std::string("order cap exceeded by ") + what + " (order " +
                            std::to_string(order) + ", cap " + std::to_string(lim.order_cap) + ")");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Group cyclic(int n, const Limits& lim) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  check_cap(n, lim, "cyclic group");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = static_cast<Elem>((a + b) % n);
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int k = 1; k < n; ++k) labels[k] = k == 1 ? "g" : "g" + std::to_string(k);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return Group::from_table(n, std::move(table), "C" + std::to_string(n), std::move(labels),
                           std::move(gens));
}

Group dihedral(int m, const Limits& lim) {
  if (m < 1) throw std::invalid_argument("dihedral group needs m >= 1");
  const int n = 2 * m;
  check_cap(n, lim, "dihedral group");
  auto idx = [m](bool refl, int k) { return static_cast<Elem>((refl ? m : 0) + ((k % m + m) % m)); };
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const bool ar = a >= m;
    const int ak = ar ? a - m : a;
    for (int b = 0; b < n; ++b) {
      const bool br = b >= m;
      const int bk = br ? b - m : b;
      Elem p;
      if (!ar && !br) p = idx(false, ak + bk);        // r^a r^b
      else if (!ar && br) p = idx(true, bk - ak);     // r^a (s r^b) = s r^(b-a)
      else if (ar && !br) p = idx(true, ak + bk);     // (s r^a) r^b
      else p = idx(false, bk - ak);                   // (s r^a)(s r^b) = r^(b-a)
      table[static_cast<std::size_t>(a) * n + b] = p;
    }
  }
  std::vector<std::string> labels(n);
  labels[0] = "e";
  for (int k = 1; k < m; ++k) labels[k] = k == 1 ? "r" : "r" + std::to_string(k);
  labels[m] = "s";
  for (int k = 1; k < m; ++k) labels[m + k] = k == 1 ? "sr" : "sr" + std::to_string(k);
  std::vector<Elem> gens;
  if (m > 1) gens.push_back(1);
  gens.push_back(static_cast<Elem>(m));
  return Group::from_table(n, std::move(table), "D" + std::to_string(m), std::move(labels),
                           std::move(gens));
}

Group symmetric(int n, const Limits& lim) {
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric group supports 1 <= n <= 7");
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_cap(fact, lim, "symmetric group");
  const int order = static_cast<int>(fact);
  std::vector<std::vector<int>> perms;
  perms.reserve(order);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  // Lexicographic rank via the factorial number system.
  std::vector<long long> fs(n, 1);
  for (int i = 1; i < n; ++i) fs[i] = fs[i - 1] * i;
  auto rank = [&](const std::vector<int>& q) {
    long long r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (q[j] < q[i]) ++smaller;
      r += smaller * fs[n - 1 - i];
    }
    return static_cast<Elem>(r);
  };
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      table[static_cast<std::size_t>(a) * order + b] = rank(comp);
    }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += static_cast<char>('0' + v);
    labels.push_back(s);
  }
  std::vector<Elem> gens;
  if (n >= 2) {
    std::vector<int> t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.push_back(rank(t));  // transposition (0 1)
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    Elem cyc = rank(c);  // n-cycle
    if (std::find(gens.begin(), gens.end(), cyc) == gens.end()) gens.push_back(cyc);
  }
  return Group::from_table(order, std::move(table), "S" + std::to_string(n), std::move(labels),
                           std::move(gens));
}

Group extraspecial(int p, int n, const Limits& lim) {
  if (!is_prime(p)) throw std::invalid_argument("extraspecial group needs a prime p");
  if (n < 1) throw std::invalid_argument("extraspecial group needs n >= 1");
  long long order = 1;
  for (int i = 0; i < 2 * n + 1; ++i) {
    order *= p;
    if (order > lim.order_cap) check_cap(order, lim, "extraspecial group");
  }
  const int N = static_cast<int>(order);
  // index = z + p * xval + p^(n+1) * yval, little-endian base-p vectors.
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  auto decode = [&](int idx, std::vector<int>& x, std::vector<int>& y, int& z) {
    z = idx % p;
    long long rest = idx / p;
    long long xv = rest % pn, yv = rest / pn;
    for (int i = 0; i < n; ++i) { x[i] = static_cast<int>(xv % p); xv /= p; }
    for (int i = 0; i < n; ++i) { y[i] = static_cast<int>(yv % p); yv /= p; }
  };
  auto encode = [&](const std::vector<int>& x, const std::vector<int>& y, int z) {
    long long xv = 0, yv = 0;
    for (int i = n - 1; i >= 0; --i) { xv = xv * p + x[i]; yv = yv * p + y[i]; }
    return static_cast<Elem>(z + p * (xv + pn * yv));
  };
  std::vector<Elem> table(static_cast<std::size_t>(N) * N);
  std::vector<int> xa(n), ya(n), xb(n), yb(n), xs(n), ys(n);
  int za, zb;
  for (int a = 0; a < N; ++a) {
    decode(a, xa, ya, za);
    for (int b = 0; b < N; ++b) {
      decode(b, xb, yb, zb);
      int dot = 0;
      for (int i = 0; i < n; ++i) dot = (dot + xa[i] * yb[i]) % p;
      for (int i = 0; i < n; ++i) { xs[i] = (xa[i] + xb[i]) % p; ys[i] = (ya[i] + yb[i]) % p; }
      table[static_cast<std::size_t>(a) * N + b] = encode(xs, ys, (za + zb + dot) % p);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(N);
  auto digits = [&](const std::vector<int>& v) {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (i) s += '.';
      s += std::to_string(v[i]);
    }
    return s;
  };
  for (int a = 0; a < N; ++a) {
    decode(a, xa, ya, za);
    labels.push_back("(" + digits(xa) + ";" + digits(ya) + ";" + std::to_string(za) + ")");
  }
  std::vector<Elem> gens;
  std::vector<int> zero(n, 0), unit(n, 0);
  for (int i = 0; i < n; ++i) {
    unit[i] = 1;
    gens.push_back(encode(unit, zero, 0));
    gens.push_back(encode(zero, unit, 0));
    unit[i] = 0;
  }
  return Group::from_table(N, std::move(table),
                           "E(" + std::to_string(p) + "," + std::to_string(n) + ")",
                           std::move(labels), std::move(gens));
}

Group direct_product(const Group& a, const Group& b, const Limits& lim) {
  const long long order = static_cast<long long>(a.order()) * b.order();
  check_cap(order, lim, "direct product");
  const int n = static_cast<int>(order);
  const int bn = b.order();
  Group g;
  g.order_ = n;
  g.descriptor_ = a.descriptor() + "x" + b.descriptor();
  if (order <= 2048) {
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        g.table_[static_cast<std::size_t>(x) * n + y] =
            static_cast<Elem>(a.mul(static_cast<Elem>(x / bn), static_cast<Elem>(y / bn)) * bn +
                              b.mul(static_cast<Elem>(x % bn), static_cast<Elem>(y % bn)));
  } else {
    g.left_ = std::make_shared<Group>(a);
    g.right_ = std::make_shared<Group>(b);
  }
  if (a.has_labels() && b.has_labels()) {
    g.labels_.reserve(n);
    for (int x = 0; x < n; ++x)
      g.labels_.push_back("(" + a.label(static_cast<Elem>(x / bn)) + "|" +
                          b.label(static_cast<Elem>(x % bn)) + ")");
  }
  for (Elem s : a.generators()) g.generators_.push_back(static_cast<Elem>(s * bn));
  for (Elem s : b.generators()) g.generators_.push_back(s);
  g.finalize();
  return g;
}

}  // namespace commprob
