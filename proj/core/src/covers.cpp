#include "foxhom/covers.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

#include "foxhom/smith.hpp"

namespace foxhom {

PermRep::PermRep(std::size_t degree, std::vector<Permutation> images)
    : degree_(degree), images_(std::move(images)) {}

PermRep PermRep::validate(const Presentation& p, std::vector<Permutation> images) {
  if (images.size() != p.generators.size()) {
    throw Error(ErrorKind::PreconditionFailed,
                "expected one permutation per generator (" +
                    std::to_string(p.generators.size()) + "), got " +
                    std::to_string(images.size()));
  }
  std::size_t degree = images.empty() ? 1 : images.front().degree();
  for (const Permutation& s : images) {
    if (s.degree() != degree) {
      throw Error(ErrorKind::PreconditionFailed, "permutations have mixed degrees");
    }
  }
  PermRep rep(degree, std::move(images));

  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (!rep.eval(p.relators[j]).is_identity()) {
      throw Error(ErrorKind::RelatorNotKilled,
                  "relator " + std::to_string(j + 1) + " (" + to_string(p, p.relators[j]) +
                      ") does not map to the identity");
    }
  }

  // orbit of point 0 under the generated group
  std::vector<bool> reached(degree, false);
  std::queue<int> frontier;
  reached[0] = true;
  frontier.push(0);
  std::size_t count = 1;
  while (!frontier.empty()) {
    int c = frontier.front();
    frontier.pop();
    for (const Permutation& s : rep.images_) {
      for (int next : {s.image(c), s.inverse().image(c)}) {
        if (!reached[static_cast<std::size_t>(next)]) {
          reached[static_cast<std::size_t>(next)] = true;
          ++count;
          frontier.push(next);
        }
      }
    }
  }
  if (count != degree) {
    throw Error(ErrorKind::NotTransitive, "images do not act transitively on " +
                                              std::to_string(degree) + " points");
  }
  return rep;
}

Permutation PermRep::eval(const Word& w) const {
  Permutation out(degree_);
  for (const Syllable& s : w.syllables()) {
    out = out * images_[static_cast<std::size_t>(s.gen)].pow(s.exp);
  }
  return out;
}

IntMatrix perm_matrix(const Permutation& sigma) {
  IntMatrix m(sigma.degree(), sigma.degree());
  for (std::size_t i = 0; i < sigma.degree(); ++i) {
    m.at(i, static_cast<std::size_t>(sigma.image(static_cast<int>(i)))) = 1;
  }
  return m;
}

IntMatrix theta_eval(const GroupRingElement& x, const PermRep& rep) {
  const std::size_t q = rep.degree();
  IntMatrix out(q, q);
  for (const auto& [word, coeff] : x.terms()) {
    Permutation sigma = rep.eval(word);
    for (std::size_t i = 0; i < q; ++i) {
      out.at(i, static_cast<std::size_t>(sigma.image(static_cast<int>(i)))) += coeff;
    }
  }
  return out;
}

IntMatrix fox_hempel_matrix(const Presentation& p, const PermRep& rep) {
  const std::size_t q = rep.degree();
  const std::size_t n = p.generators.size();
  const std::size_t m = p.relators.size();
  Jacobian jac = fox_jacobian(p);
  IntMatrix out(n * q, m * q);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      IntMatrix block = theta_eval(jac.entry(i, j), rep);
      for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t c = 0; c < q; ++c) {
          out.at(j * q + r, i * q + c) = block.at(r, c);
        }
      }
    }
  }
  return out;
}

AbelianGroup subgroup_h1_fox(const Presentation& p, const PermRep& rep) {
  AbelianGroup padded = abelian_group_from_presentation_matrix(fox_hempel_matrix(p, rep));
  return padded.subtract_free_rank(rep.degree() - 1);
}

std::vector<PermRep> enumerate_index2_reps(const Presentation& p) {
  const std::size_t n = p.generators.size();
  if (n >= 63) {
    throw Error(ErrorKind::TooLarge, "index-2 enumeration supports at most 62 generators");
  }
  std::vector<std::uint64_t> parity;
  parity.reserve(p.relators.size());
  for (const Word& r : p.relators) {
    std::uint64_t bits = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (r.exponent_sum(static_cast<int>(g)) % 2 != 0) bits |= std::uint64_t{1} << g;
    }
    parity.push_back(bits);
  }
  std::vector<PermRep> reps;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool kills_all = true;
    for (std::uint64_t bits : parity) {
      if (__builtin_parityll(mask & bits)) {
        kills_all = false;
        break;
      }
    }
    if (!kills_all) continue;
    std::vector<Permutation> images;
    images.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
      images.push_back((mask >> g) & 1 ? Permutation::transposition(2, 0, 1) : Permutation(2));
    }
    reps.push_back(PermRep::validate(p, std::move(images)));
  }
  return reps;
}

namespace {

std::string schreier_name(const std::vector<std::string>& taken, const std::string& gen,
                          std::size_t coset) {
  std::string name = gen + "_" + std::to_string(coset + 1);
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

}  // namespace

Presentation reidemeister_schreier(const Presentation& p, const PermRep& rep) {
  const std::size_t q = rep.degree();
  const std::size_t n = p.generators.size();

  std::vector<Permutation> inv;
  inv.reserve(n);
  for (std::size_t g = 0; g < n; ++g) inv.push_back(rep.image(g).inverse());

  // Breadth-first Schreier tree from the base coset; for each popped coset,
  // generators in presentation order, positive direction before negative.
  // tree[c][g] marks the positive pair (c, g) as a tree edge.
  std::vector<std::vector<bool>> tree(q, std::vector<bool>(n, false));
  std::vector<bool> visited(q, false);
  std::queue<std::size_t> bfs;
  visited[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop();
    for (std::size_t g = 0; g < n; ++g) {
      auto fwd = static_cast<std::size_t>(rep.image(g).image(static_cast<int>(c)));
      if (!visited[fwd]) {
        visited[fwd] = true;
        tree[c][g] = true;
        bfs.push(fwd);
      }
      auto bwd = static_cast<std::size_t>(inv[g].image(static_cast<int>(c)));
      if (!visited[bwd]) {
        visited[bwd] = true;
        tree[bwd][g] = true;
        bfs.push(bwd);
      }
    }
  }

  // Schreier generators: one per non-tree positive pair, generator-major.
  std::vector<std::vector<int>> label(q, std::vector<int>(n, -1));
  Presentation sub;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t c = 0; c < q; ++c) {
      if (tree[c][g]) continue;
      label[c][g] = static_cast<int>(sub.generators.size());
      sub.generators.push_back(schreier_name(sub.generators, p.generators[g], c));
    }
  }

  // Rewrite of w_c r w_c^-1: the transversal words are tree words, so the
  // rewrite is just the relator traversal started at coset c with tree
  // letters dropped.
  for (const Word& r : p.relators) {
    for (std::size_t c0 = 0; c0 < q; ++c0) {
      std::vector<Syllable> out;
      std::size_t c = c0;
      for (const Syllable& s : r.syllables()) {
        auto g = static_cast<std::size_t>(s.gen);
        if (s.exp > 0) {
          for (std::int64_t step = 0; step < s.exp; ++step) {
            if (label[c][g] >= 0) out.push_back({label[c][g], 1});
            c = static_cast<std::size_t>(rep.image(g).image(static_cast<int>(c)));
          }
        } else {
          for (std::int64_t step = 0; step < -s.exp; ++step) {
            c = static_cast<std::size_t>(inv[g].image(static_cast<int>(c)));
            if (label[c][g] >= 0) out.push_back({label[c][g], -1});
          }
        }
      }
      sub.relators.push_back(Word::from_syllables(std::move(out)));
    }
  }
  return sub;
}

AbelianGroup subgroup_h1_rs(const Presentation& p, const PermRep& rep) {
  return abelian_group_from_presentation_matrix(
      abelianized_relator_matrix(reidemeister_schreier(p, rep)));
}

AbelianGroup cover_chain_h1(const Presentation& p, const PermRep& rep) {
  const std::size_t q = rep.degree();
  const std::size_t n = p.generators.size();
  const std::size_t m = p.relators.size();

  // q vertices, nq edges (generator-major), mq cells (relator-major)
  IntMatrix d1(q, n * q);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < q; ++i) {
      auto to = static_cast<std::size_t>(rep.image(g).image(static_cast<int>(i)));
      if (to == i) continue;
      d1.at(to, g * q + i) += 1;
      d1.at(i, g * q + i) -= 1;
    }
  }

  // Boundary of the relator lift starting on sheet u: a running tally of the
  // lifted edges crossed, independent of the Fox derivative route.
  IntMatrix d2(n * q, m * q);
  std::vector<Permutation> inv;
  inv.reserve(n);
  for (std::size_t g = 0; g < n; ++g) inv.push_back(rep.image(g).inverse());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t u = 0; u < q; ++u) {
      std::size_t c = u;
      for (const Syllable& s : p.relators[j].syllables()) {
        auto g = static_cast<std::size_t>(s.gen);
        if (s.exp > 0) {
          for (std::int64_t step = 0; step < s.exp; ++step) {
            d2.at(g * q + c, j * q + u) += 1;
            c = static_cast<std::size_t>(rep.image(g).image(static_cast<int>(c)));
          }
        } else {
          for (std::int64_t step = 0; step < -s.exp; ++step) {
            c = static_cast<std::size_t>(inv[g].image(static_cast<int>(c)));
            d2.at(g * q + c, j * q + u) -= 1;
          }
        }
      }
      if (c != u) {
        throw std::logic_error("relator lift did not close up; invalid representation");
      }
    }
  }
  if (!(d1 * d2).is_zero()) {
    throw std::logic_error("d1 * d2 != 0 in the lifted chain complex");
  }

  // ker d1 is spanned by the kernel columns of Q; express im d2 in that
  // basis via Q^-1 and present the quotient.
  SmithDecomposition s1 = smith_normal_form(d1);
  const std::size_t rank1 = s1.rank();
  IntMatrix y = s1.q_inv * d2;
  for (std::size_t i = 0; i < rank1; ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      if (y.at(i, j) != 0) {
        throw std::logic_error("im d2 escapes ker d1");
      }
    }
  }
  IntMatrix rel(n * q - rank1, m * q);
  for (std::size_t i = rank1; i < n * q; ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) rel.at(i - rank1, j) = y.at(i, j);
  }
  return abelian_group_from_presentation_matrix(rel);
}

std::optional<TwoAvoidingCover> find_two_avoiding_index2(const Presentation& p) {
  for (const PermRep& rep : enumerate_index2_reps(p)) {
    AbelianGroup h1 = subgroup_h1_fox(p, rep);
    if (is_two_avoiding(h1)) return TwoAvoidingCover{rep, h1};
  }
  return std::nullopt;
}

PermRep parse_perm_rep(const Presentation& p, const std::string& text) {
  // comma-separated entries: "deg=q" or "<generator>:<cycles|id>"
  std::vector<std::string> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    entries.push_back(
        text.substr(start, stop == std::string::npos ? std::string::npos : stop - start));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }

  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };

  std::size_t degree = 1;
  std::vector<std::pair<int, std::string>> specs;
  for (std::string& raw : entries) {
    std::string entry = trim(raw);
    if (entry.empty()) {
      throw ParseError(ErrorKind::SyntaxError, "empty entry in representation text", 1, 1);
    }
    if (entry.rfind("deg=", 0) == 0) {
      try {
        degree = std::max(degree, static_cast<std::size_t>(std::stoul(entry.substr(4))));
      } catch (const std::exception&) {
        throw ParseError(ErrorKind::SyntaxError, "bad degree '" + entry + "'", 1, 1);
      }
      continue;
    }
    std::size_t colon = entry.find(':');
    if (colon == std::string::npos) {
      throw ParseError(ErrorKind::SyntaxError, "expected '<generator>:<permutation>' in '" +
                                                   entry + "'",
                       1, 1);
    }
    std::string name = trim(entry.substr(0, colon));
    int gen = p.generator_index(name);
    if (gen < 0) {
      throw ParseError(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'", 1, 1);
    }
    for (const auto& [g, spec] : specs) {
      if (g == gen) {
        throw ParseError(ErrorKind::SyntaxError, "generator '" + name + "' assigned twice", 1, 1);
      }
    }
    specs.emplace_back(gen, trim(entry.substr(colon + 1)));
  }
  if (specs.size() != p.generators.size()) {
    throw ParseError(ErrorKind::SyntaxError, "representation must assign every generator", 1, 1);
  }

  // degree = largest moved point unless given explicitly
  std::vector<Permutation> images;
  for (const auto& [gen, spec] : specs) {
    degree = std::max(degree, parse_cycles(spec).degree());
  }
  images.assign(p.generators.size(), Permutation(degree));
  for (const auto& [gen, spec] : specs) {
    images[static_cast<std::size_t>(gen)] = parse_cycles(spec, degree);
  }
  return PermRep::validate(p, std::move(images));
}

std::string to_string(const PermRep& rep, const Presentation& p) {
  std::ostringstream os;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    if (g) os << ", ";
    os << p.generators[g] << ':' << to_cycles(rep.image(g));
  }
  return os.str();
}

}  // namespace foxhom
