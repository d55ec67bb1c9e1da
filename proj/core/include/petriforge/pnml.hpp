#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "petriforge/error.hpp"
#include "petriforge/net.hpp"

namespace petriforge {

inline constexpr std::string_view kPnmlNamespace = "http://www.pnml.org/version-2009/grammar/pnml";
inline constexpr std::string_view kPtNetType = "http://www.pnml.org/version-2009/grammar/ptnet";

enum class PnmlErrorKind {
  MalformedXml,
  NotPtNet,
  MissingElement,
  DuplicateId,
  DuplicateName,
  DanglingArc,
  NotBipartite,
  DuplicateArc,
  BadMarking,
  BadInscription,
};

std::string_view pnml_error_kind_name(PnmlErrorKind kind) noexcept;

/// Rejected PNML input. element_id() names the offending element when there
/// is one (empty for XML syntax errors).
class PnmlError : public Error {
 public:
  PnmlError(PnmlErrorKind kind, std::string element_id, const std::string& what)
      : Error(what), kind_(kind), element_id_(std::move(element_id)) {}

  PnmlErrorKind kind() const noexcept { return kind_; }
  const std::string& element_id() const noexcept { return element_id_; }

 private:
  PnmlErrorKind kind_;
  std::string element_id_;
};

struct PnmlParseResult {
  MarkedNet net;
  /// Ignored content such as graphics or tool-specific blocks.
  std::vector<std::string> warnings;
};

/// Reads the first P/T net of a PNML document. Nodes may sit directly under
/// <net> or inside (nested) pages; pages are flattened. Names come from
/// name/text, falling back to the id. Missing initialMarking means 0, missing
/// inscription means 1.
PnmlParseResult parse_pnml(std::string_view xml);

/// Deterministic PNML: places, then transitions, then arcs (grouped by
/// transition, inputs before outputs, each by place index). Ids are p<i>, t<i>
/// and a<i>. Zero markings and weight-1 inscriptions are omitted.
std::string write_pnml(const MarkedNet& mn);

}  // namespace petriforge
