#ifndef PSILAB_CORE_HPP
#define PSILAB_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace psilab {

using Word = std::uint64_t;

namespace limits {
// Hard structural bound: bitset word + single-byte graph6 size form.
inline constexpr int kMaxVertices = 62;
// Default cap for exponential operations (psi/omega enumeration, matchings,
// well-coveredness). Overridable per call; the CLI maps PSILAB_MAX_N here.
inline constexpr int kDefaultMaxN = 24;
// Exact clique-cover search stays at desk scale.
inline constexpr int kThetaMaxN = 12;
// Full labeled-graph sweeps refuse larger orders unless the cap is raised.
inline constexpr int kDefaultSweepMaxN = 6;
// Maximum-matching enumeration budget; truncation is reported, never silent.
inline constexpr long long kDefaultMatchingEnumCap = 1'000'000;
}  // namespace limits

/// Input could not be parsed. `where` is a byte offset (graph6) or a line
/// number (edge lists / family literals); -1 when not meaningful.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long where = -1)
      : std::runtime_error(what), where_(where) {}
  long where() const { return where_; }

 private:
  long where_;
};

/// An operation was asked to exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on arguments was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace psilab

#endif  // PSILAB_CORE_HPP
