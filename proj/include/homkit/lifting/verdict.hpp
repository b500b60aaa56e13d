#pragma once

#include "homkit/xclass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homkit {

enum class Status { Holds, Fails, HypothesisNotEstablished };

inline auto to_string(Status s) -> std::string {
  switch (s) {
  case Status::Holds: return "holds";
  case Status::Fails: return "fails";
  case Status::HypothesisNotEstablished: return "hypothesis-not-established";
  }
  return "";
}

/// A certificate (a lift, extension or homotopy found) or a counterexample.
struct Witness {
  std::string description;
  std::vector<ModuleMap> maps;
  std::vector<ChainMap> chain_maps;
  std::vector<Complex> complexes;
  std::optional<Homotopy> homotopy;
};

struct Verdict {
  Status status = Status::Holds;
  std::string universe;
  /// Number of (probe, map) instances examined.
  std::size_t instances = 0;
  std::optional<Witness> counterexample;
  /// True when the counterexample was confirmed by exhaustive search.
  bool counterexample_confirmed = false;
  std::vector<Witness> certificates;
  std::string note;
  /// Agreement with an independent criterion, where one exists.
  std::optional<bool> cross_check_agrees;

  [[nodiscard]] auto holds() const -> bool { return status == Status::Holds; }
};

inline constexpr std::size_t certificate_cap = 32;

inline void add_certificate(Verdict &v, Witness w) {
  if (v.certificates.size() < certificate_cap) v.certificates.push_back(std::move(w));
}

class HypothesisNotEstablished : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace homkit
