#include "raag/words.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <unordered_set>

namespace raag {

void Element::push(const Graph& g, std::vector<Letter>& word, Letter x) {
  // Walk left through letters commuting with x; a matching inverse cancels.
  std::size_t i = word.size();
  while (i > 0) {
    Letter y = word[i - 1];
    if (y.vertex() == x.vertex()) {
      if (y == x.inv()) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i - 1));
        return;
      }
      break;
    }
    if (!g.adjacent(y.vertex(), x.vertex())) break;
    --i;
  }
  for (std::size_t j = i; j < word.size(); ++j) {
    if (x < word[j]) {
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(j), x);
      return;
    }
  }
  word.push_back(x);
}

Element Element::generator(GraphPtr g, Vertex v, int power) {
  if (v >= g->size()) throw WordError("generator index out of range");
  Element e(std::move(g));
  Letter l = Letter::make(v, power < 0);
  for (int k = 0; k < std::abs(power); ++k) e.letters_.push_back(l);
  return e;
}

Element Element::from_letters(GraphPtr g, std::span<const Letter> word) {
  Element e(std::move(g));
  for (Letter l : word) {
    if (l.vertex() >= e.graph_->size()) throw WordError("letter outside the graph");
    push(*e.graph_, e.letters_, l);
  }
  return e;
}

Element Element::parse(GraphPtr g, std::string_view text) {
  Element e(g);
  std::size_t pos = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    std::string_view name = tok;
    long k = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      std::string_view num = tok.substr(caret + 1);
      const char* first = num.data();
      const char* last = num.data() + num.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (num.empty() || ec != std::errc() || ptr != last)
        throw WordError("malformed exponent in token '" + std::string(tok) + "'");
      if (k == 0) throw WordError("zero exponent in token '" + std::string(tok) + "'");
    }
    if (name.empty()) throw WordError("malformed token '" + std::string(tok) + "'");
    if (!g->has_vertex(name)) {
      if (name == "1" && tok == "1") continue;
      throw WordError("unknown generator '" + std::string(name) + "'");
    }
    Letter l = Letter::make(g->index(name), k < 0);
    for (long i = 0; i < std::abs(k); ++i) push(*g, e.letters_, l);
  }
  return e;
}

Element Element::inverse() const {
  Element e(graph_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) push(*graph_, e.letters_, it->inv());
  return e;
}

Element Element::pow(long k) const {
  Element base = k < 0 ? inverse() : *this;
  Element out(graph_);
  for (long i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

Element Element::conjugate_by(const Element& s) const { return s * *this * s.inverse(); }

Element& Element::operator*=(const Element& y) {
  if (!graph_) graph_ = y.graph_;
  if (y.graph_ && graph_ != y.graph_ && !(*graph_ == *y.graph_))
    throw WordError("elements belong to different graphs");
  for (Letter l : y.letters_) push(*graph_, letters_, l);
  return *this;
}

VertexSet Element::support() const {
  VertexSet s;
  for (Letter l : letters_) s = s.with(l.vertex());
  return s;
}

Element Element::retract(VertexSet w) const {
  // Deleting letters of a canonical word leaves a canonical word only up to
  // reordering, so the result is rebuilt.
  Element e(graph_);
  for (Letter l : letters_)
    if (w.contains(l.vertex())) push(*graph_, e.letters_, l);
  return e;
}

std::vector<long> Element::abelianization() const {
  std::vector<long> out(graph_ ? graph_->size() : 0, 0);
  for (Letter l : letters_) out[l.vertex()] += l.sign();
  return out;
}

std::vector<std::size_t> Element::first_positions() const {
  std::vector<std::size_t> out;
  VertexSet seen;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    Vertex v = letters_[i].vertex();
    if (!seen.contains(v) && (seen - graph_->link(v)).empty()) out.push_back(i);
    seen = seen.with(v);
  }
  return out;
}

std::vector<std::size_t> Element::last_positions() const {
  std::vector<std::size_t> out;
  VertexSet seen;
  for (std::size_t i = letters_.size(); i-- > 0;) {
    Vertex v = letters_[i].vertex();
    if (!seen.contains(v) && (seen - graph_->link(v)).empty()) out.push_back(i);
    seen = seen.with(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Element Element::without_position(std::size_t i) const {
  std::vector<Letter> w = letters_;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
  return from_letters(graph_, w);
}

std::string Element::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long k = static_cast<long>(j - i) * letters_[i].sign();
    if (!out.empty()) out += ' ';
    out += graph_->name(letters_[i].vertex());
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

Element multiply(const Element& x, const Element& y) { return x * y; }
Element invert(const Element& x) { return x.inverse(); }

CyclicForm cyclic_reduction(const Element& x) {
  Element conj = x.identity();
  Element core = x;
  for (bool changed = true; changed;) {
    changed = false;
    auto lasts = core.last_positions();
    for (std::size_t f : core.first_positions()) {
      Letter l = core.letters()[f];
      bool hit = std::any_of(lasts.begin(), lasts.end(),
                             [&](std::size_t j) { return j != f && core.letters()[j] == l.inv(); });
      if (!hit) continue;
      Element g = Element::from_letters(x.graph_ptr(), std::span<const Letter>(&l, 1));
      core = g.inverse() * core * g;
      conj *= g;
      changed = true;
      break;
    }
  }
  return {conj, core};
}

CyclicForm cyclic_normal_form(const Element& x) {
  CyclicForm red = cyclic_reduction(x);
  // Closure of the core under moving a front letter to the back.
  std::map<std::vector<Letter>, Element> seen;
  std::deque<std::pair<Element, Element>> queue;
  seen.emplace(red.core.letters(), x.identity());
  queue.emplace_back(red.core, x.identity());
  while (!queue.empty()) {
    auto [r, q] = queue.front();
    queue.pop_front();
    for (std::size_t f : r.first_positions()) {
      Letter l = r.letters()[f];
      Element g = Element::from_letters(x.graph_ptr(), std::span<const Letter>(&l, 1));
      Element next = g.inverse() * r * g;
      if (seen.count(next.letters())) continue;
      Element q2 = q * g;
      seen.emplace(next.letters(), q2);
      queue.emplace_back(std::move(next), std::move(q2));
    }
  }
  const auto& [least, q] = *seen.begin();
  return {red.conjugator * q, Element::from_letters(x.graph_ptr(), least)};
}

std::vector<Element> enumerate_ball(const GraphPtr& g, std::size_t radius, VertexSet gens) {
  std::vector<Letter> alphabet;
  for (Vertex v : gens.members()) {
    alphabet.push_back(Letter::make(v, false));
    alphabet.push_back(Letter::make(v, true));
  }
  std::vector<Element> out{Element(g)};
  std::unordered_set<Element> seen{Element(g)};
  std::size_t begin = 0;
  for (std::size_t k = 0; k < radius; ++k) {
    std::size_t end = out.size();
    std::vector<Element> level;
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter l : alphabet) {
        Element e = out[i];
        e *= Element::from_letters(g, std::span<const Letter>(&l, 1));
        if (e.length() == k + 1 && seen.insert(e).second) level.push_back(std::move(e));
      }
    }
    std::sort(level.begin(), level.end());
    begin = end;
    for (auto& e : level) out.push_back(std::move(e));
  }
  return out;
}

std::size_t ElementHash::operator()(const Element& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : x.letters()) h = (h ^ l.code) * 1099511628211ull;
  return h;
}

}  // namespace raag
