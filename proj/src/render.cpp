#include "render.h"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cf {

namespace {

using nlohmann::json;

// largest parts first; a prefix outranks its extensions only when the
// extra parts are zero, which stripped keys never carry
bool parts_before(const Ints& a, const Ints& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

std::vector<std::pair<Ints, TPoly>> canonical_terms(
    const std::map<Ints, TPoly>& terms) {
  std::vector<std::pair<Ints, TPoly>> out(terms.begin(), terms.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = a.second.low_degree(), db = b.second.low_degree();
    if (da != db) return da < db;
    return parts_before(a.first, b.first);
  });
  return out;
}

std::string bracket_list(const Ints& parts) {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

std::string term_text(const std::string& sym, const Ints& parts,
                      const TPoly& c) {
  std::string body = sym + bracket_list(parts);
  if (c == TPoly(1)) return body;
  return "(" + c.str() + ")*" + body;
}

std::string joined_terms(const std::map<Ints, TPoly>& terms,
                         const std::string& sym) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [parts, c] : canonical_terms(terms)) {
    if (!s.empty()) s += " + ";
    s += term_text(sym, parts, c);
  }
  return s;
}

long long small_int(const Int& a) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (a < lo || a > hi) throw std::overflow_error("render: coefficient too large for JSON");
  return a.convert_to<long long>();
}

json coeff_array(const TPoly& c) {
  json arr = json::array();
  for (int d = 0; d <= c.degree(); ++d) arr.push_back(small_int(c.coeff(d)));
  return arr;
}

json terms_array(const std::map<Ints, TPoly>& terms) {
  json arr = json::array();
  for (const auto& [parts, c] : canonical_terms(terms))
    arr.push_back({{"partition", parts}, {"coeff", coeff_array(c)}});
  return arr;
}

json tableau_json(const StrongMarkedTableau& t) {
  json covers = json::array();
  for (const auto& cov : t.chain)
    covers.push_back({{"tau", cov.tau.shape()},
                      {"mark", cov.mark},
                      {"spin", spin(cov)}});
  return {{"outside", t.outside.shape()}, {"covers", covers}};
}

}  // namespace

std::string render_text(const Ints& partition) {
  std::string s;
  for (size_t i = 0; i < partition.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(partition[i]);
  }
  return s;
}

std::string render_text(const SymFunc& f) { return joined_terms(f.terms(), "s"); }

std::string render_text(const KExpansion& e) {
  return joined_terms(e.terms(), "s^" + std::to_string(e.k()));
}

std::string render_text(const Core& c) { return render_text(c.shape()); }

std::string render_text(const StrongMarkedTableau& t) {
  // cell entries name the cover that added them, starred at its mark row;
  // cells of the initial core print as dots
  const Core& out = t.outside;
  const Core& inner = t.chain.empty() ? out : t.chain.front().tau;
  std::set<std::pair<int, int>> stars;
  for (size_t j = 0; j < t.chain.size(); ++j) {
    int r = t.chain[j].mark;
    stars.insert({r, t.chain[j].kappa.row(r)});
  }
  int width = 1;
  for (size_t n = t.chain.size(); n >= 10; n /= 10) ++width;
  std::ostringstream os;
  for (int r = 1; r <= out.length(); ++r) {
    for (int c = 1; c <= out.row(r); ++c) {
      std::string cell;
      if (c <= inner.row(r)) {
        cell = ".";
      } else {
        size_t j = 0;
        while (j < t.chain.size() && c > t.chain[j].kappa.row(r)) ++j;
        cell = std::to_string(j + 1);
        if (stars.count({r, c}) && c == t.chain[j].kappa.row(r)) cell += "*";
      }
      os << cell << std::string(width + 2 - cell.size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Ints& partition) { return json(partition).dump(); }

std::string render_json(const SymFunc& f) {
  return json{{"basis", "schur"}, {"terms", terms_array(f.terms())}}.dump();
}

std::string render_json(const KExpansion& e) {
  return json{{"k", e.k()},
              {"basis", "kschur"},
              {"terms", terms_array(e.terms())}}
      .dump();
}

std::string render_json(const Core& c) {
  return json{{"shape", c.shape()}, {"n", c.n()}}.dump();
}

std::string render_json(const StrongMarkedTableau& t) {
  return tableau_json(t).dump();
}

std::string render_json(const std::vector<StrongMarkedTableau>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back(tableau_json(t));
  return arr.dump();
}

}  // namespace cf
