#include "fixerlab/sporadic.hpp"

#include <algorithm>

namespace fixerlab {

const std::vector<SporadicRow> &sporadic_rows() {
  static const std::vector<SporadicRow> rows = {
      {"M11", "M11/GL2(3)", "M11/M9:2", true, true, ""},
      // not in the published table: M11 has elements of order 4, PSL2(11) none
      {"M12", "M12/PSL2(11)", "M12/M11", true, false, "expected by the acceptance list; element orders rule it out"},
      {"M22", "M22/2^4:S5", "M22/2^4:A6", true, true, ""},
      {"M22", "M22/A7", "M22/A7'", true, true, ""},
      {"M23", "M23/PSigmaL3(4)", "M23/2^4:A7", true, true, ""},
      {"M23", "M23/2^4:A7", "M23/PSigmaL3(4)", true, true, ""},
      {"J1", "J1/D6xD10", "J1/2xA5", true, true, ""},
      {"J1", "J1/7:6", "J1/2^3:7:3", true, true, ""},
      {"M11", "M11/M9:2", "M11/M10", false, false, "negative control"},
      {"M12", "M12/PSL2(11)", "M12/M10:2", false, false, "negative control"},
      {"M22", "M22/A7", "M22/2^4:A6", false, false, "negative control"},
      {"M23", "M23/A8", "M23/2^4:A7", false, false, "negative control"},
      {"J1", "J1/7:6", "J1/D6xD10", false, false, "negative control"},
  };
  return rows;
}

namespace {

std::string slug(const std::string &s) {
  std::string o;
  for (char c : s) {
    if (c == '^' || c == ')') continue;
    if (c == '\'') o += 'b';
    else if (c == ':') o += '.';
    else if (c == '(') o += '_';
    else o += c;
  }
  return o;
}

std::optional<std::string> resolve(const Registry &R, const std::string &group, const std::string &tok) {
  for (const auto &n : R.names()) {
    if (n.rfind(group + "/", 0) != 0) continue;
    std::string leaf = n.substr(group.size() + 1);
    if (leaf == tok || slug(leaf) == slug(tok)) return n;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SporadicRow> find_sporadic_row(const Registry &R, const std::string &spec) {
  // split on the last two colons that separate registry names; names may
  // contain ':' themselves, so try every split
  std::vector<size_t> colons;
  for (size_t i = 0; i < spec.size(); ++i)
    if (spec[i] == ':') colons.push_back(i);
  for (size_t a = 0; a < colons.size(); ++a)
    for (size_t b = a + 1; b < colons.size(); ++b) {
      std::string g = spec.substr(0, colons[a]);
      auto h = resolve(R, g, spec.substr(colons[a] + 1, colons[b] - colons[a] - 1));
      auto k = resolve(R, g, spec.substr(colons[b] + 1));
      if (!h || !k || !R.has(g)) continue;
      for (const auto &r : sporadic_rows())
        if (r.group == g && r.H == *h && r.K == *k) return r;
      return SporadicRow{g, *h, *k, false, false, "ad hoc"};
    }
  return std::nullopt;
}

ImplicitContainment implicit_containment(const std::vector<Perm> &G_gens, const std::vector<Perm> &H_gens,
                                         const std::vector<Perm> &K_gens) {
  ImplicitContainment out;
  std::vector<Perm> H = H_gens.empty() ? std::vector<Perm>{Perm(G_gens.at(0).degree())}
                                       : enumerate_elements(G_gens.at(0).degree(), H_gens);
  std::sort(H.begin(), H.end());
  auto A = implicit_coset_action(G_gens, H);
  out.index = A.index;
  const size_t n = G_gens[0].degree();
  PermGroup K(n, K_gens.empty() ? std::vector<Perm>{Perm(n)} : K_gens);
  K.enumerate();
  const auto &cls = K.classes();
  out.k_classes = cls.count();
  std::vector<uint8_t> fixes(cls.count(), 0);
#pragma omp parallel for schedule(dynamic)
  for (size_t c = 0; c < cls.count(); ++c) {
    Perm x = K.element(cls.rep[c]);
    for (const auto &r : A.coset_reps)
      if (std::binary_search(H.begin(), H.end(), r * x * r.inverse())) {
        fixes[c] = 1;
        break;
      }
  }
  out.contained = true;
  for (size_t c = 0; c < cls.count(); ++c)
    if (!fixes[c]) {
      out.contained = false;
      out.witness = K.element(cls.rep[c]);
      break;
    }
  return out;
}

SporadicResult check_sporadic_row(const Registry &R, const SporadicRow &row) {
  SporadicResult res;
  res.row = row;
  const auto &G = R.file(row.group), &H = R.file(row.H), &K = R.file(row.K);
  res.g_order = StabChain(G.degree, G.gens).order();
  res.h_order = closure_order(H);
  res.k_order = closure_order(K);
  for (auto [f, n] : {std::pair{&G, res.g_order}, {&H, res.h_order}, {&K, res.k_order}})
    if (f->order && *f->order != n)
      throw GroupIOError(row.str() + ": " + f->name + " declared order " + std::to_string(*f->order) +
                         ", closure has order " + std::to_string(n));
  if (H.degree != G.degree || K.degree != G.degree) throw GroupIOError(row.str() + ": degree mismatch");
  StabChain chain(G.degree, G.gens);
  for (const auto *S : {&H, &K})
    for (const auto &g : S->gens)
      if (!chain.contains(g)) throw GroupIOError(row.str() + ": " + S->name + " is not a subgroup of " + G.name);
  auto c = implicit_containment(G.gens, H.gens, K.gens);
  res.index = c.index;
  res.contained = c.contained;
  res.witness = c.witness;
  return res;
}

}  // namespace fixerlab
