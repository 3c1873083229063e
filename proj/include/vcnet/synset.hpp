#pragma once

#include <map>
#include <string>

namespace vcnet {

/// Maps each wnid to its top-level ancestor wnid (or itself near the root).
struct SynsetMap {
    std::map<std::string, std::string> entries;

    const std::string& resolve(const std::string& wnid) const;
};

/// Walks an XML hierarchy of nested <synset wnid="..."> elements. A synset
/// with at least 3 ancestors maps to the third element on its root-to-node
/// path; shallower synsets map to themselves.
SynsetMap build_synset_map(const std::string& xml_path);

SynsetMap parse_synset_xml(const std::string& xml_text, const std::string& origin = "<string>");

}  // namespace vcnet
