#include "lie/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

std::string bad_type_message(char family, int rank) {
  std::ostringstream os;
  os << "invalid Dynkin type " << family << rank << ": valid pairs are A l>=1, B l>=2, C l>=2, "
     << "D l>=3, E l in {6,7,8}, F l=4, G l=2";
  return os.str();
}

}  // namespace

DynkinType::DynkinType(char fam, int rk) : family(fam), rank(rk) {
  if (!is_valid(fam, rk)) throw std::invalid_argument(bad_type_message(fam, rk));
}

bool DynkinType::is_valid(char family, int rank) {
  switch (family) {
    case 'A':
      return rank >= 1;
    case 'B':
    case 'C':
      return rank >= 2;
    case 'D':
      return rank >= 3;  // D3 accepted as alias of A3
    case 'E':
      return rank >= 6 && rank <= 8;
    case 'F':
      return rank == 4;
    case 'G':
      return rank == 2;
    default:
      return false;
  }
}

DynkinType DynkinType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("malformed Dynkin type: \"" + s + "\"");
  char fam = s[0];
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed Dynkin type: \"" + s + "\"");
  }
  int rank = std::stoi(s.substr(1));
  if (!is_valid(fam, rank)) throw std::invalid_argument(bad_type_message(fam, rank));
  return DynkinType(fam, rank);
}

std::string DynkinType::to_string() const {
  return std::string(1, family) + std::to_string(rank);
}

int DynkinType::positive_root_count() const {
  int l = rank;
  switch (family) {
    case 'A':
      return l * (l + 1) / 2;
    case 'B':
    case 'C':
      return l * l;
    case 'D':
      return l * (l - 1);
    case 'E':
      return l == 6 ? 36 : (l == 7 ? 63 : 120);
    case 'F':
      return 24;
    case 'G':
      return 6;
    default:
      throw std::logic_error("unreachable");
  }
}

int DynkinType::algebra_dim() const {
  return rank + 2 * positive_root_count();
}

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool Root::is_positive() const {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

bool Root::is_negative() const {
  bool any = false;
  for (int c : coeffs) {
    if (c > 0) return false;
    if (c < 0) any = true;
  }
  return any;
}

Root Root::operator-() const {
  Root r(*this);
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root Root::operator+(const Root& o) const {
  Root r(*this);
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r(*this);
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

std::string Root::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + "]";
}

Root Root::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("malformed root \"" + s + "\": expected \"[n1,...,nl]\"");
  std::vector<int> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) throw std::invalid_argument("malformed root \"" + s + "\": empty coordinates");
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_of(" \t") != std::string::npos)
      throw std::invalid_argument("malformed root \"" + s + "\": whitespace in coordinate");
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed root \"" + s + "\": bad coordinate \"" + tok + "\"");
    }
    if (pos != tok.size())
      throw std::invalid_argument("malformed root \"" + s + "\": bad coordinate \"" + tok + "\"");
    out.push_back(v);
  }
  return Root(std::move(out));
}

namespace {

// Bourbaki Cartan matrices, cartan[i][j] = <a_i, a_j^v>.
std::vector<std::vector<int>> make_cartan(const DynkinType& t) {
  int l = t.rank;
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // simple edge
    c[i][j] = -1;
    c[j][i] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'B':
      // a_l short: <a_{l-1}, a_l^v> = -2.
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
      c[l - 2][l - 1] = -2;
      c[l - 1][l - 2] = -1;
      break;
    case 'C':
      // a_l long: <a_l, a_{l-1}^v> = -2.
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
      c[l - 2][l - 1] = -1;
      c[l - 1][l - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 3 < l; ++i) bond(i, i + 1);
      bond(l - 3, l - 2);
      bond(l - 3, l - 1);
      break;
    case 'E':
      // Chain 1-3-4-5-...-l with node 2 attached to node 4.
      bond(0, 2);
      bond(2, 3);
      bond(1, 3);
      for (int i = 3; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case 'F':
      // a_1, a_2 long; a_3, a_4 short; double bond 2=>3.
      bond(0, 1);
      c[1][2] = -2;
      c[2][1] = -1;
      bond(2, 3);
      break;
    case 'G':
      // a_1 short, a_2 long.
      c[0][1] = -1;
      c[1][0] = -3;
      break;
    default:
      throw std::logic_error("unreachable");
  }
  return c;
}

// d_i = (a_i, a_i)/2 under the long-root-squared-length-2 convention.
std::vector<Rat> root_length_halves(const DynkinType& t) {
  int l = t.rank;
  std::vector<Rat> d(l, Rat(1));
  switch (t.family) {
    case 'B':
      d[l - 1] = Rat(1, 2);
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) d[i] = Rat(1, 2);
      break;
    case 'F':
      d[2] = Rat(1, 2);
      d[3] = Rat(1, 2);
      break;
    case 'G':
      d[0] = Rat(1, 3);
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

RootSystem RootSystem::build(const DynkinType& type) {
  if (!DynkinType::is_valid(type.family, type.rank))
    throw std::invalid_argument(bad_type_message(type.family, type.rank));

  RootSystem rs;
  rs.type_ = type;
  rs.cartan_ = make_cartan(type);
  int l = type.rank;

  std::vector<Rat> d = root_length_halves(type);
  rs.form_.assign(l, std::vector<Rat>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.form_[i][j] = d[j] * Rat(rs.cartan_[i][j]);

  // Root-string closure level by level. For positive beta and simple
  // a_i, beta + a_i is a root iff p - <beta, a_i^v> > 0 where
  // p = max{k : beta - k a_i is a root}; all roots of smaller height
  // are already known when a level is processed.
  std::set<std::vector<int>> known;
  std::vector<Root> level;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    known.insert(e);
    level.emplace_back(e);
  }
  std::vector<Root> positives(level);
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const Root& beta : level) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        Root down = beta;
        for (;;) {
          down.coeffs[i] -= 1;
          if (known.count(down.coeffs) == 0) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += beta.coeffs[j] * rs.cartan_[j][i];
        if (p - pairing > 0) {
          Root up = beta;
          up.coeffs[i] += 1;
          if (known.count(up.coeffs) == 0) next.insert(up.coeffs);
        }
      }
    }
    level.clear();
    for (const auto& c : next) {
      known.insert(c);
      level.emplace_back(c);
    }
    for (const Root& r : level) positives.push_back(r);
  }

  std::sort(positives.begin(), positives.end());
  if (static_cast<int>(positives.size()) != type.positive_root_count())
    throw std::logic_error("root closure produced " + std::to_string(positives.size()) +
                           " positive roots for " + type.to_string());
  rs.positives_ = positives;
  rs.all_ = positives;
  for (const Root& r : positives) rs.all_.push_back(-r);
  for (size_t i = 0; i < rs.all_.size(); ++i) rs.index_[rs.all_[i].coeffs] = static_cast<int>(i);
  return rs;
}

bool RootSystem::is_root(const Root& r) const {
  return index_.count(r.coeffs) != 0;
}

int RootSystem::root_index(const Root& r) const {
  auto it = index_.find(r.coeffs);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::positive_index(const Root& r) const {
  int idx = root_index(r);
  if (idx < 0 || idx >= static_cast<int>(positives_.size()))
    throw std::invalid_argument(r.to_string() + " is not a positive root of " + type_.to_string());
  return idx;
}

void RootSystem::check_root_arg(const Root& r, const char* what) const {
  if (static_cast<int>(r.coeffs.size()) != rank())
    throw std::invalid_argument(std::string(what) + ": coordinate length " +
                                std::to_string(r.coeffs.size()) + " does not match rank " +
                                std::to_string(rank()));
  if (!is_root(r))
    throw std::invalid_argument(std::string(what) + ": " + r.to_string() + " is not a root of " +
                                type_.to_string());
}

Rat RootSystem::form(const Root& a, const Root& b) const {
  Rat s(0);
  for (int i = 0; i < rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.coeffs[j] == 0) continue;
      s += Rat(a.coeffs[i]) * form_[i][j] * Rat(b.coeffs[j]);
    }
  }
  return s;
}

int RootSystem::cartan_pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.coeffs[j] * cartan_[j][i];
  return s;
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  check_root_arg(alpha, "reflect");
  check_root_arg(beta, "reflect");
  Rat coef = Rat(2) * form(alpha, beta) / form(alpha, alpha);
  if (coef.get_den() != 1) throw std::logic_error("non-integral reflection coefficient");
  long k = coef.get_num().get_si();
  Root out = beta;
  for (int i = 0; i < rank(); ++i) out.coeffs[i] -= static_cast<int>(k) * alpha.coeffs[i];
  if (!is_root(out)) throw std::logic_error("reflection left the root set");
  return out;
}

std::vector<Root> RootSystem::weyl_orbit(const Root& alpha) const {
  check_root_arg(alpha, "weyl_orbit");
  std::set<std::vector<int>> seen{alpha.coeffs};
  std::deque<Root> queue{alpha};
  while (!queue.empty()) {
    Root cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      int pairing = cartan_pairing(cur, i);
      Root img = cur;
      img.coeffs[i] -= pairing;  // r_i in coordinates
      if (seen.insert(img.coeffs).second) queue.push_back(img);
    }
  }
  std::vector<Root> orbit;
  orbit.reserve(seen.size());
  for (const auto& c : seen) orbit.emplace_back(c);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<int> RootSystem::support(const Root& alpha) const {
  if (static_cast<int>(alpha.coeffs.size()) != rank())
    throw std::invalid_argument("support: coordinate length does not match rank");
  bool all_zero = std::all_of(alpha.coeffs.begin(), alpha.coeffs.end(), [](int c) { return c == 0; });
  if (all_zero) throw std::invalid_argument("support: zero vector rejected");
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i)
    if (alpha.coeffs[i] != 0) out.push_back(i);
  return out;
}

std::vector<Root> RootSystem::dominant_roots() const {
  std::vector<Root> out;
  for (const Root& mu : all_) {
    bool dominant = true;
    for (int i = 0; i < rank() && dominant; ++i) {
      std::vector<int> simple(rank(), 0);
      simple[i] = 1;
      if (form(mu, Root(simple)) < 0) dominant = false;
    }
    if (dominant) out.push_back(mu);
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return b < a; });
  return out;
}

Root RootSystem::highest_root() const {
  std::vector<Root> dom = dominant_roots();
  if (dom.empty()) throw std::logic_error("no dominant root");
  return dom.front();  // maximal height first
}

std::vector<std::vector<int>> RootSystem::simple_reflection_matrix(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("simple reflection index out of range");
  std::vector<std::vector<int>> m(rank(), std::vector<int>(rank(), 0));
  for (int k = 0; k < rank(); ++k) m[k][k] = 1;
  for (int j = 0; j < rank(); ++j) m[i][j] -= cartan_[j][i];
  return m;
}

namespace {

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
  size_t n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.matrix.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) w.matrix[i][i] = 1;
  return w;
}

Root WeylElement::apply(const Root& r) const {
  int n = static_cast<int>(matrix.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += matrix[i][j] * r.coeffs[j];
  return Root(std::move(out));
}

std::optional<WeylElement> RootSystem::conjugating_weyl_element(const Root& gamma,
                                                                const Root& beta) const {
  check_root_arg(gamma, "conjugating_weyl_element");
  check_root_arg(beta, "conjugating_weyl_element");
  // BFS with parent tracking over simple reflections.
  std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;  // coeffs -> (parent, i)
  std::deque<Root> queue{gamma};
  parent[gamma.coeffs] = {gamma.coeffs, -1};
  bool found = (gamma == beta);
  while (!queue.empty() && !found) {
    Root cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      int pairing = cartan_pairing(cur, i);
      Root img = cur;
      img.coeffs[i] -= pairing;
      if (parent.count(img.coeffs) == 0) {
        parent[img.coeffs] = {cur.coeffs, i};
        if (img == beta) {
          found = true;
          break;
        }
        queue.push_back(img);
      }
    }
  }
  if (!found) return std::nullopt;
  std::vector<int> word;
  std::vector<int> cur = beta.coeffs;
  while (!(cur == gamma.coeffs)) {
    auto& [prev, gen] = parent[cur];
    word.push_back(gen);
    cur = prev;
  }
  std::reverse(word.begin(), word.end());
  WeylElement w = WeylElement::identity(rank());
  w.word = word;
  for (int i : word) w.matrix = mat_mul(simple_reflection_matrix(i), w.matrix);
  if (!(w.apply(gamma) == beta)) throw std::logic_error("weyl word/matrix mismatch");
  return w;
}

bool RootSystem::in_theta_span(const Root& r, const std::vector<int>& theta) const {
  for (int i : theta)
    if (i < 0 || i >= rank()) throw std::invalid_argument("theta index out of range");
  Root pos = r.is_negative() ? -r : r;
  if (!pos.is_positive()) throw std::invalid_argument("in_theta_span: zero vector");
  std::vector<char> allowed(rank(), 0);
  for (int i : theta) allowed[i] = 1;
  for (int i = 0; i < rank(); ++i)
    if (pos.coeffs[i] != 0 && !allowed[i]) return false;
  return true;
}

}  // namespace lie
