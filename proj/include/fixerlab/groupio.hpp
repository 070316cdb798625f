#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixerlab/ffield.hpp"
#include "fixerlab/group.hpp"

namespace fixerlab {

struct GroupIOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text format:
//   # comment
//   degree 11
//   name M11          (optional)
//   order 7920        (optional; checked against the closure)
//   format cycles     (optional; default is 1-based image lists)
//   2 10 4 ...        one permutation per line
// Cycle lines look like (1,2,3)(4,5); an empty line or "()" is the identity.
struct GroupFile {
  size_t degree = 0;
  std::string name;
  std::optional<uint64_t> order;
  bool cycles = false;
  std::vector<std::string> comments;
  std::vector<Perm> gens;
  bool operator==(const GroupFile &) const = default;
};

GroupFile parse_group_file(std::string_view text);
std::string serialize_group(const GroupFile &f);
GroupFile load_group_file(const std::filesystem::path &p);

// Closure order via a stabiliser chain.
uint64_t closure_order(const GroupFile &f);
// Throws when the declared order disagrees with the closure.
void verify_order(const GroupFile &f);

// Named groups: the shipped files under <data>/groups plus builtins
// A<n>, S<n> (natural action). Subgroups of a shipped group are addressed as
// "M11/GL2(3)", matching the name line of the companion file.
class Registry {
 public:
  explicit Registry(std::filesystem::path root = std::filesystem::path(data_dir()) / "groups");
  std::vector<std::string> names() const;
  bool has(const std::string &name) const;
  const GroupFile &file(const std::string &name) const;
  // Enumerated group with its order checked.
  PermGroup lookup(const std::string &name) const;
  void add(const std::string &name, GroupFile f);

 private:
  std::map<std::string, GroupFile> files_;
};

}  // namespace fixerlab
