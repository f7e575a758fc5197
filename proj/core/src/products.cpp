#include "gtw/products.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gtw {

int Factor::rank() const {
  switch (kind) {
    case Kind::Free: return param;
    case Kind::Orientable: return 2 * param;
    case Kind::NonOrientable: return param;
  }
  return 0;
}

bool Factor::abelian() const { return param == 1; }

bool Factor::nontrivial_center() const {
  return abelian() || (kind == Kind::NonOrientable && param == 2);
}

GroupContext Factor::context() const {
  switch (kind) {
    case Kind::Free:
      return GroupContext::free_group(param);
    case Kind::Orientable:
      if (param == 1) return GroupContext::abelian({0, 0});
      return GroupContext::small_cancellation(Presentation::orientable_surface(param));
    case Kind::NonOrientable:
      if (param == 1) return GroupContext::abelian({2});
      if (param == 2) return GroupContext::klein_bottle();
      if (param == 3) return GroupContext::presented(Presentation::nonorientable_surface(3));
      return GroupContext::small_cancellation(Presentation::nonorientable_surface(param));
  }
  throw std::logic_error("bad factor kind");
}

Presentation Factor::presentation() const {
  switch (kind) {
    case Kind::Free: return Presentation::free_group(param);
    case Kind::Orientable: return Presentation::orientable_surface(param);
    case Kind::NonOrientable:
      // The rank-2 case is kept in the a b a^-1 b convention so that the
      // normal-form oracle and the presentation share generators.
      if (param == 2) return Presentation(Alphabet(2), {Word(Alphabet(2), {1, 2, -1, 2})});
      return Presentation::nonorientable_surface(param);
  }
  throw std::logic_error("bad factor kind");
}

std::string Factor::name() const {
  switch (kind) {
    case Kind::Free: return param == 1 ? "Z" : "F" + std::to_string(param);
    case Kind::Orientable: return "S" + std::to_string(param);
    case Kind::NonOrientable: return param == 1 ? "C2" : "NS" + std::to_string(param);
  }
  return "?";
}

int ProductGroup::rank() const {
  int r = 0;
  for (const Factor& f : factors) r += f.rank();
  return r;
}

std::string ProductGroup::name() const {
  std::string out;
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += " x ";
    out += factors[i].name();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

ProductGroup::Type ProductGroup::classify_type() const {
  bool all_center = true, none_center = true;
  for (const Factor& f : factors) (f.nontrivial_center() ? none_center : all_center) = false;
  if (all_center) return Type::Euclidean;
  if (none_center) return Type::Hyperbolic;
  return Type::Mixed;
}

ProductGroup parse_product(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.empty()) throw std::invalid_argument("empty product spec");

  auto parse_factor = [](const std::string& tok) {
    std::string base = tok;
    int mult = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      mult = std::stoi(tok.substr(caret + 1));
      if (mult < 1) throw std::invalid_argument("bad multiplicity in " + tok);
    }
    Factor f{};
    if (base == "Z") {
      f = {Factor::Kind::Free, 1};
    } else if (base == "C2") {
      f = {Factor::Kind::NonOrientable, 1};
    } else {
      Factor::Kind kind;
      std::string num;
      if (base.rfind("NS", 0) == 0) {
        kind = Factor::Kind::NonOrientable;
        num = base.substr(2);
      } else if (base.rfind("F", 0) == 0) {
        kind = Factor::Kind::Free;
        num = base.substr(1);
      } else if (base.rfind("S", 0) == 0) {
        kind = Factor::Kind::Orientable;
        num = base.substr(1);
      } else {
        throw std::invalid_argument("unknown factor: " + base);
      }
      if (num.empty() || !std::all_of(num.begin(), num.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad factor parameter: " + base);
      f = {kind, std::stoi(num)};
      if (f.param < 1) throw std::invalid_argument("bad factor parameter: " + base);
    }
    return std::make_pair(f, mult);
  };

  ProductGroup g;
  bool expect_factor = true;
  for (const std::string& tok : toks) {
    if (expect_factor) {
      auto [f, mult] = parse_factor(tok);
      for (int i = 0; i < mult; ++i) g.factors.push_back(f);
    } else if (tok != "x" && tok != "X") {
      throw std::invalid_argument("expected 'x', got: " + tok);
    }
    expect_factor = !expect_factor;
  }
  if (expect_factor) throw std::invalid_argument("trailing 'x' in product spec");
  return g;
}

ProductElement identity_element(const ProductGroup& g) {
  ProductElement e;
  for (const Factor& f : g.factors) e.components.emplace_back(f.alphabet());
  return e;
}

ProductElement multiply(const ProductElement& x, const ProductElement& y) {
  if (x.components.size() != y.components.size())
    throw std::invalid_argument("component count mismatch");
  ProductElement out;
  for (std::size_t i = 0; i < x.components.size(); ++i)
    out.components.push_back(concat(x.components[i], y.components[i]));
  return out;
}

ProductElement invert(const ProductElement& x) {
  ProductElement out;
  for (const Word& w : x.components) out.components.push_back(invert(w));
  return out;
}

Verdict element_equal(const ProductGroup& g, const ProductElement& x, const ProductElement& y) {
  if (x.components.size() != g.factors.size() || y.components.size() != g.factors.size())
    throw std::invalid_argument("component count mismatch");
  bool unknown = false;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    Verdict v = g.factors[i].context().equal(x.components[i], y.components[i]);
    if (v == Verdict::NotEqual) return Verdict::NotEqual;
    if (v == Verdict::Unknown) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::Equal;
}

Verdict element_trivial(const ProductGroup& g, const ProductElement& x) {
  return element_equal(g, x, identity_element(g));
}

ProductElement parse_product_element(const ProductGroup& g, const std::string& text) {
  std::string s = text;
  auto trim = [](std::string& v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    v = b == std::string::npos ? "" : v.substr(b, e - b + 1);
  };
  trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != g.factors.size())
    throw std::invalid_argument("expected " + std::to_string(g.factors.size()) +
                                " components, got " + std::to_string(parts.size()));
  ProductElement e;
  for (std::size_t i = 0; i < parts.size(); ++i)
    e.components.push_back(parse_word(g.factors[i].alphabet(), parts[i]));
  return e;
}

std::string element_str(const ProductElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.components.size(); ++i) {
    if (i) out += " ; ";
    out += x.components[i].empty() ? "1" : x.components[i].str();
  }
  return out + ")";
}

ProductEndo::ProductEndo(ProductGroup g, std::vector<std::vector<ProductElement>> images)
    : group_(std::move(g)), images_(std::move(images)) {
  if (images_.size() != group_.factors.size())
    throw std::invalid_argument("image table has wrong factor count");
  for (std::size_t f = 0; f < images_.size(); ++f) {
    if (static_cast<int>(images_[f].size()) != group_.factors[f].rank())
      throw std::invalid_argument("image table has wrong generator count");
    for (const ProductElement& e : images_[f]) {
      if (e.components.size() != group_.factors.size())
        throw std::invalid_argument("generator image has wrong component count");
      for (std::size_t j = 0; j < e.components.size(); ++j)
        if (e.components[j].alphabet() != group_.factors[j].alphabet())
          throw std::invalid_argument("generator image has a mismatched component alphabet");
    }
  }
  for (std::size_t f = 0; f < images_.size(); ++f)
    for (const Word& rel : group_.factors[f].presentation().relators) {
      ProductElement img = identity_element(group_);
      for (Letter x : rel.letters()) {
        const ProductElement& gi = images_[f][(x > 0 ? x : -x) - 1];
        img = multiply(img, x > 0 ? gi : invert(gi));
      }
      if (element_trivial(group_, img) != Verdict::Equal)
        throw std::invalid_argument("relator image could not be certified trivial");
    }
}

ProductElement ProductEndo::apply(const ProductElement& x) const {
  if (x.components.size() != group_.factors.size())
    throw std::invalid_argument("component count mismatch");
  ProductElement out = identity_element(group_);
  for (std::size_t f = 0; f < x.components.size(); ++f)
    for (Letter l : x.components[f].letters()) {
      const ProductElement& gi = images_[f][(l > 0 ? l : -l) - 1];
      out = multiply(out, l > 0 ? gi : invert(gi));
    }
  return out;
}

namespace {

void tuples_rec(const ProductGroup& g, std::size_t f, int budget, ProductElement& acc,
                std::vector<ProductElement>& out) {
  if (f == g.factors.size()) {
    out.push_back(acc);
    return;
  }
  for (const Word& w : enumerate_words(g.factors[f].alphabet(), budget)) {
    acc.components[f] = w;
    tuples_rec(g, f + 1, budget - w.length(), acc, out);
  }
  acc.components[f] = Word(g.factors[f].alphabet());
}

}  // namespace

ProductFixBuckets fix_words_product(const ProductEndo& phi, int max_length) {
  const ProductGroup& g = phi.group();
  std::vector<ProductElement> all;
  ProductElement acc = identity_element(g);
  tuples_rec(g, 0, max_length, acc, all);

  ProductFixBuckets buckets;
  for (const ProductElement& x : all) {
    Verdict v = element_equal(g, phi.apply(x), x);
    if (v == Verdict::Equal)
      buckets.certified.push_back(x);
    else if (v == Verdict::Unknown)
      buckets.uncertain.push_back(x);
  }
  return buckets;
}

namespace {

/// Center of one factor as (text, free rank, torsion).
SubgroupDescription factor_center(const Factor& f) {
  SubgroupDescription d;
  if (f.kind == Factor::Kind::Free && f.param == 1) {
    d = {"Z", 1, {}, true};
  } else if (f.kind == Factor::Kind::Orientable && f.param == 1) {
    d = {"Z^2", 2, {}, true};
  } else if (f.kind == Factor::Kind::NonOrientable && f.param == 1) {
    d = {"Z/2", 0, {2}, true};
  } else if (f.kind == Factor::Kind::NonOrientable && f.param == 2) {
    d = {"Z", 1, {}, false};
  } else {
    d = {"1", 0, {}, false};
  }
  return d;
}

void append_description(SubgroupDescription& acc, const SubgroupDescription& part) {
  acc.text += acc.text.empty() ? part.text : " x " + part.text;
  acc.free_rank += part.free_rank;
  acc.torsion_orders.insert(acc.torsion_orders.end(), part.torsion_orders.begin(),
                            part.torsion_orders.end());
  acc.whole = acc.whole && part.whole;
}

}  // namespace

SubgroupDescription center(const ProductGroup& g) {
  SubgroupDescription acc;
  acc.whole = true;
  for (const Factor& f : g.factors) append_description(acc, factor_center(f));
  return acc;
}

SubgroupDescription centralizer(const ProductGroup& g, const ProductElement& x) {
  if (x.components.size() != g.factors.size())
    throw std::invalid_argument("component count mismatch");
  SubgroupDescription acc;
  acc.whole = true;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    Verdict triv = f.context().is_identity(x.components[i]);
    if (triv == Verdict::Unknown) throw std::invalid_argument("undecidable component");
    SubgroupDescription part;
    if (triv == Verdict::Equal || f.abelian()) {
      part = {f.name(), f.kind == Factor::Kind::NonOrientable && f.param == 1 ? 0 : f.rank(),
              f.kind == Factor::Kind::NonOrientable && f.param == 1 ? std::vector<int>{2}
                                                                    : std::vector<int>{},
              true};
    } else if (f.kind == Factor::Kind::NonOrientable && f.param == 2) {
      KleinNormalForm nf = klein_normal_form(x.components[i]);
      if (nf.a_exp % 2 == 0 && nf.b_exp == 0) {
        part = {f.name(), 2, {}, true};  // central element
      } else if (nf.a_exp % 2 == 0) {
        part = {"Z^2", 2, {}, false};
      } else {
        part = {"Z", 1, {}, false};
      }
    } else {
      // Hyperbolic factor, nontrivial component: cyclic centralizer.
      part = {"Z", 1, {}, false};
    }
    append_description(acc, part);
  }
  return acc;
}

bool isomorphic(const ProductGroup& g, const ProductGroup& h) {
  if (g.classify_type() != ProductGroup::Type::Hyperbolic ||
      h.classify_type() != ProductGroup::Type::Hyperbolic)
    throw std::invalid_argument("isomorphism test covers hyperbolic type only");
  std::vector<Factor> a = g.factors, b = h.factors;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

RectangularResult rectangular_decompose(const ProductEndo& phi) {
  const ProductGroup& g = phi.group();
  if (g.classify_type() != ProductGroup::Type::Hyperbolic)
    throw std::invalid_argument("rectangular decomposition covers hyperbolic type only");

  RectangularResult res;
  RectangularDecomposition dec;
  int n = static_cast<int>(g.factors.size());
  dec.target.assign(n, -1);
  dec.maps.resize(n);

  for (int f = 0; f < n; ++f) {
    for (int gen = 1; gen <= g.factors[f].rank(); ++gen) {
      const ProductElement& img = phi.image(f, gen);
      std::vector<int> live;
      for (int j = 0; j < n; ++j)
        if (g.factors[j].context().is_identity(img.components[j]) != Verdict::Equal)
          live.push_back(j);
      if (live.size() >= 2) {
        res.witness = {f, gen};
        return res;
      }
      if (live.size() == 1) {
        if (dec.target[f] == -1) dec.target[f] = live[0];
        if (dec.target[f] != live[0]) {
          res.witness = {f, gen};
          return res;
        }
      }
    }
    if (dec.target[f] == -1) dec.target[f] = f;  // all generators die
    for (int gen = 1; gen <= g.factors[f].rank(); ++gen)
      dec.maps[f].push_back(phi.image(f, gen).components[dec.target[f]]);
  }
  res.decomposition = std::move(dec);
  return res;
}

bool recomposition_matches(const ProductEndo& phi, const RectangularDecomposition& dec) {
  const ProductGroup& g = phi.group();
  for (std::size_t f = 0; f < g.factors.size(); ++f)
    for (int gen = 1; gen <= g.factors[f].rank(); ++gen) {
      ProductElement rebuilt = identity_element(g);
      rebuilt.components[dec.target[f]] = dec.maps[f][gen - 1];
      if (!(rebuilt == phi.image(static_cast<int>(f), gen))) return false;
    }
  return true;
}

CycleFixReport fix_of_cycle(const std::vector<FreeEndo>& phis, int max_length) {
  if (phis.empty()) throw std::invalid_argument("empty cycle");
  FreeEndo composite = phis[0];
  for (std::size_t i = 1; i < phis.size(); ++i) composite = compose(phis[i], composite);
  CycleFixReport rep{composite, fix_subgroup_approx({composite}, max_length), 0};
  rep.rank = rep.fix.graph.rank();
  return rep;
}

}  // namespace gtw
