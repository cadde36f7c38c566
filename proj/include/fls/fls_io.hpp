#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "fls/coloring.hpp"
#include "fls/incidence.hpp"

namespace fls {

class FlsFormatError : public std::runtime_error {
 public:
  FlsFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Contents of a .fls file: a space and an optional colouring.
///
///   points <v>
///   label <index> <name>      (optional, repeatable)
///   green <i1> <i2> ...       (optional colouring block)
///   red   <i1> <i2> ...
///   line  <i1> <i2> <i3> ...  (2-lines may be omitted)
///
/// '#' starts a comment. Omitted pairs become 2-lines.
struct FlsDocument {
  FiniteLinearSpace space;
  std::optional<Colouring> colouring;
};

FlsDocument parse_fls(const std::string& text);
FlsDocument read_fls(const std::string& path);

/// Deterministic output: labels only when not the default indices, then the
/// colouring, then the lines of size >= 3 in the space's line order.
std::string format_fls(const FiniteLinearSpace& s, const std::optional<Colouring>& colouring = std::nullopt);
inline std::string format_fls(const MRGeometry& mr) { return format_fls(mr.space(), mr.colouring()); }

void write_fls(const std::string& path, const FiniteLinearSpace& s,
               const std::optional<Colouring>& colouring = std::nullopt);
inline void write_fls(const std::string& path, const MRGeometry& mr) {
  write_fls(path, mr.space(), mr.colouring());
}

}  // namespace fls
