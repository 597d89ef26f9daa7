#include "snake_atlas/qcalc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace snake_atlas {

QPoly q_integer(int k) {
  if (k < 0) throw std::invalid_argument("q-integers need k >= 0");
  return QPoly(0, std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
}

BiPoly::BiPoly(std::vector<QPoly> t_coeffs) : coeffs_(std::move(t_coeffs)) { normalize(); }

BiPoly BiPoly::monomial(QPoly c, int exp) {
  if (exp < 0) throw std::invalid_argument("BiPoly exponents are nonnegative");
  std::vector<QPoly> v(static_cast<std::size_t>(exp) + 1);
  v.back() = std::move(c);
  return BiPoly(std::move(v));
}

QPoly BiPoly::coeff(int exp) const {
  if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(exp)];
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<QPoly> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return BiPoly(std::move(v));
}

LaurentPoly BiPoly::at_q_one() const {
  std::vector<std::int64_t> v;
  for (const QPoly& c : coeffs_) v.push_back(c.evaluate(1));
  return LaurentPoly(0, std::move(v));
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const QPoly& c = coeffs_[e];
    if (c.is_zero()) continue;
    if (!first) os << '+';
    first = false;
    // Reuse the t-printer and rename the variable.
    std::string body = c.to_string();
    std::replace(body.begin(), body.end(), 't', 'q');
    const bool single_term = c.coeffs().size() == 1 ||
                             std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                           [](std::int64_t x) { return x != 0; }) == 1;
    if (e == 0) {
      os << body;
      continue;
    }
    if (body == "1") body.clear();
    else if (!single_term) body = "(" + body + ")";
    os << body << 't';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

void BiPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly op_D(const BiPoly& f) {
  std::vector<QPoly> v;
  for (std::size_t n = 1; n < f.t_coeffs().size(); ++n)
    v.push_back(q_integer(static_cast<int>(n)) * f.t_coeffs()[n]);
  return BiPoly(std::move(v));
}

BiPoly op_U(const BiPoly& f) {
  if (f.is_zero()) return {};
  std::vector<QPoly> v{QPoly{}};
  v.insert(v.end(), f.t_coeffs().begin(), f.t_coeffs().end());
  return BiPoly(std::move(v));
}

QOperator::QOperator(std::vector<std::string> words) : words_(std::move(words)) {
  for (const std::string& w : words_)
    if (w.empty() || w.find_first_not_of("DU") != std::string::npos)
      throw std::invalid_argument("operator words use only the letters D and U, got '" + w + "'");
}

BiPoly QOperator::apply(const BiPoly& f) const {
  BiPoly total;
  for (const std::string& w : words_) {
    BiPoly g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) g = *it == 'D' ? op_D(g) : op_U(g);
    total += g;
  }
  return total;
}

BiPoly QOperator::power(int n, BiPoly f) const {
  if (n < 0) throw std::invalid_argument("operator powers need n >= 0");
  for (int i = 0; i < n; ++i) f = apply(f);
  return f;
}

const QOperator& p_operator() {
  static const QOperator op({"D", "UUD"});
  return op;
}
const QOperator& q_operator() {
  static const QOperator op({"D", "UDU"});
  return op;
}
const QOperator& r_operator() {
  static const QOperator op({"D", "DUU"});
  return op;
}

BiPoly qpoly_P(int n) { return p_operator().power(n, BiPoly::monomial(QPoly::constant(1), 1)); }
BiPoly qpoly_Q(int n) { return q_operator().power(n, BiPoly::monomial(QPoly::constant(1), 0)); }
BiPoly qpoly_R(int n) { return r_operator().power(n, BiPoly::monomial(QPoly::constant(1), 0)); }

namespace {

// Removes label j (the largest) from an inorder word and returns the number
// of empty leaves before the slot j was grown on. An internal node with two
// empty children reads 0,j,0 and collapses to 0; its own left child is not
// counted. A labelled leaf never has a 0 neighbour.
int peel_largest(Word& word, int j, std::size_t first) {
  const auto it = std::find(word.begin() + static_cast<std::ptrdiff_t>(first), word.end(), j);
  if (it == word.end()) throw std::logic_error("label missing while peeling");
  const auto p = static_cast<std::size_t>(it - word.begin());
  int before = static_cast<int>(std::count(word.begin() + static_cast<std::ptrdiff_t>(first), it, 0));
  if (p > first && word[p - 1] == 0) {
    --before;
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(p), word.begin() + static_cast<std::ptrdiff_t>(p) + 2);
  } else {
    word[p] = 0;
  }
  return before;
}

}  // namespace

WeightedTree weight_tree(const IncBinTree& tree) {
  WeightedTree out{tree, std::vector<int>(static_cast<std::size_t>(tree.size()), 0), 0};
  Word word = tree.inorder_word();
  for (int j = tree.size(); j >= 1; --j) {
    const int c = peel_largest(word, j, 0);
    out.steps[static_cast<std::size_t>(j - 1)] = c;
    out.weight += c;
  }
  return out;
}

WeightedForest weight_forest(const IncForest& forest) {
  WeightedForest out{forest, std::vector<int>(static_cast<std::size_t>(forest.size()), 0), 0};
  std::vector<Word> words;
  std::vector<RootColor> colors;
  for (std::size_t i = 0; i < forest.components().size(); ++i) {
    words.push_back(forest.component_word(i));
    colors.push_back(forest.components()[i].color);
  }
  for (int j = forest.size(); j >= 1; --j) {
    int earlier = 0;
    int d = -1;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].front() == j) {
        // The largest label is a root only when its component is [j, o], the last one.
        d = earlier + (colors[i] == RootColor::black ? 1 : 0);
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(i));
        colors.erase(colors.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
      if (std::find(words[i].begin(), words[i].end(), j) != words[i].end()) {
        d = earlier + peel_largest(words[i], j, 1);
        break;
      }
      earlier += static_cast<int>(std::count(words[i].begin(), words[i].end(), 0));
    }
    if (d < 0) throw std::logic_error("label missing while peeling a forest");
    out.steps[static_cast<std::size_t>(j - 1)] = d;
    out.weight += d;
  }
  return out;
}

BiPoly weighted_sum_trees(int n) {
  if (n == 0) return BiPoly::monomial(QPoly::constant(1), 1);
  BiPoly sum;
  for (const IncBinTree& t : enumerate_trees(n))
    sum += BiPoly::monomial(QPoly::monomial(1, weight_tree(t).weight), stat_emp(t));
  return sum;
}

BiPoly weighted_sum_forests(int n, bool white_only) {
  BiPoly sum;
  for (const IncForest& f : enumerate_forests(n, white_only))
    sum += BiPoly::monomial(QPoly::monomial(1, weight_forest(f).weight), stat_emp(f));
  return sum;
}

}  // namespace snake_atlas
