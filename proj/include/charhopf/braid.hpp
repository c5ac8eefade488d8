#pragma once

// Braid words and the combinatorics of their closures.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "charhopf/io.hpp"

namespace charhopf {

/// Signed Artin generators b_i^{±1} on m strands; letter k stores ±i.
class BraidWord {
 public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters_)
      if (l == 0 || std::abs(l) >= strands_)
        throw std::invalid_argument("generator " + std::to_string(l) + " out of range for " +
                                    std::to_string(strands_) + " strands");
  }

  /// Parses whitespace-separated signed generators, e.g. "1 -2 1 -2". The
  /// strand count defaults to max|i| + 1.
  static BraidWord parse(const std::string& text, int strands = 0) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw parse_error("bad braid generator \"" + tok + "\"");
      }
      if (used != tok.size() || v == 0) throw parse_error("bad braid generator \"" + tok + "\"");
      letters.push_back(v);
    }
    int needed = 1;
    for (int l : letters) needed = std::max(needed, std::abs(l) + 1);
    if (strands == 0) strands = needed;
    if (strands < needed)
      throw parse_error("braid uses " + std::to_string(needed) + " strands but only " + std::to_string(strands) +
                        " were given");
    return BraidWord(strands, std::move(letters));
  }

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }

  int writhe() const noexcept {
    int w = 0;
    for (int l : letters_) w += l > 0 ? 1 : -1;
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) s += (i ? " " : "") + std::to_string(letters_[i]);
    return s;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

struct LinkStats {
  /// kappa[p] (1-based) is the top strand that arrives at bottom position p.
  std::vector<int> kappa;
  /// Components as cycles of kappa, each starting at its smallest strand.
  std::vector<std::vector<int>> cycles;
  std::vector<int> component_writhes;
  /// Symmetric; the diagonal is zero.
  std::vector<std::vector<int>> linking_matrix;

  std::size_t components() const noexcept { return cycles.size(); }
};

/// Cycle notation of kappa, e.g. "(42531)" or "(1)(2)" for the identity.
inline std::string cycle_notation(const LinkStats& st) {
  std::string s;
  for (const auto& cyc : st.cycles) {
    s += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) s += (i && st.kappa.size() >= 10 ? " " : "") + std::to_string(cyc[i]);
    s += ")";
  }
  return s;
}

inline LinkStats link_stats(const BraidWord& b) {
  const int m = b.strands();
  std::vector<int> occupant(m);
  for (int i = 0; i < m; ++i) occupant[i] = i + 1;
  for (int l : b.letters()) std::swap(occupant[std::abs(l) - 1], occupant[std::abs(l)]);

  LinkStats st;
  st.kappa = occupant;
  std::vector<int> component(m + 1, -1);
  for (int start = 1; start <= m; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> cyc;
    for (int x = start; component[x] < 0; x = st.kappa[x - 1]) {
      component[x] = static_cast<int>(st.cycles.size());
      cyc.push_back(x);
    }
    st.cycles.push_back(std::move(cyc));
  }

  const std::size_t k = st.cycles.size();
  st.component_writhes.assign(k, 0);
  std::vector<std::vector<int>> inter(k, std::vector<int>(k, 0));
  for (int i = 0; i < m; ++i) occupant[i] = i + 1;
  for (int l : b.letters()) {
    const int pos = std::abs(l) - 1;
    const int sign = l > 0 ? 1 : -1;
    const int a = component[occupant[pos]], c = component[occupant[pos + 1]];
    if (a == c) {
      st.component_writhes[a] += sign;
    } else {
      inter[a][c] += sign;
      inter[c][a] += sign;
    }
    std::swap(occupant[pos], occupant[pos + 1]);
  }
  st.linking_matrix.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (inter[i][j] % 2) throw std::logic_error("odd inter-component crossing count");
      st.linking_matrix[i][j] = inter[i][j] / 2;
    }
  return st;
}

}  // namespace charhopf
