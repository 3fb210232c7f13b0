#pragma once

#include <string>
#include <vector>

#include "raag/words.hpp"

namespace raag {

enum class Verdict { Conjugate, NotConjugate, Inconclusive };

struct ConjugacyResult {
  Verdict status = Verdict::Inconclusive;
  Element witness;                // set when Conjugate: witness * g * witness^-1 == h
  std::string reason;             // certifying invariant when NotConjugate
  std::vector<std::string> path;  // route through the engine

  static ConjugacyResult conjugate(Element w, std::string step) {
    return {Verdict::Conjugate, std::move(w), {}, {std::move(step)}};
  }
  static ConjugacyResult not_conjugate(std::string reason) {
    return {Verdict::NotConjugate, {}, reason, {std::move(reason)}};
  }
  static ConjugacyResult inconclusive(std::string step) {
    return {Verdict::Inconclusive, {}, {}, {std::move(step)}};
  }

  bool is_conjugate() const { return status == Verdict::Conjugate; }
  bool is_not_conjugate() const { return status == Verdict::NotConjugate; }
  bool is_inconclusive() const { return status == Verdict::Inconclusive; }

  ConjugacyResult& via(const std::string& step) {
    path.insert(path.begin(), step);
    return *this;
  }
  std::string path_string() const {
    std::string out;
    for (const auto& p : path) out += (out.empty() ? "" : "/") + p;
    return out;
  }
};

}  // namespace raag
