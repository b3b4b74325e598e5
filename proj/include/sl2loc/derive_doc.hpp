#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sl2loc/tdo.hpp"

namespace sl2loc {

/// The table of global operators beta(E), beta(F), beta(H) at a twist,
/// rendered in the operator grammar, plus the Casimir constant.
struct DeriveDoc {
  long t = 1;
  std::vector<std::pair<std::string, std::string>> ops;  // name -> rendered operator
  std::string casimir;

  bool operator==(const DeriveDoc& o) const {
    return t == o.t && ops == o.ops && casimir == o.casimir;
  }
};

DeriveDoc derive_doc(long t);

std::string derive_doc_to_text(const DeriveDoc& doc);
std::string derive_doc_to_json(const DeriveDoc& doc);
DeriveDoc derive_doc_from_json(const std::string& text);

/// Parses every rendered operator back and compares against a fresh
/// derivation; the round-trip oracle for the grammar and the JSON surface.
bool derive_doc_roundtrip_ok(const DeriveDoc& doc);

}  // namespace sl2loc
