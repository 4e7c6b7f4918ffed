#include <algorithm>

#include "unitals/analysis.hpp"

namespace unitals {

namespace {

unsigned square_root_order(const Field& f) {
  if (!f.odd()) throw Error(ErrorCode::EvenCharacteristicUnsupported, "difference sets need odd characteristic");
  unsigned q = 1;
  while ((q + 1) * (q + 1) <= f.order()) ++q;
  if (q * q != f.order()) throw Error(ErrorCode::NotASquareOrder, "field order is not a square");
  return q;
}

class CliqueSearch {
 public:
  CliqueSearch(const Field& f, const std::vector<Elem>& domain) : domain_(domain), adj_(domain.size()) {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      adj_[i].assign(domain.size(), 0);
      for (std::size_t j = 0; j < domain.size(); ++j) {
        adj_[i][j] = i != j && f.is_nonsquare(f.sub(domain[i], domain[j]));
      }
    }
  }

  // All cliques of maximum size when target == 0, else all of size target.
  std::vector<std::vector<Elem>> run(std::size_t target) {
    target_ = target;
    best_ = target;
    std::vector<std::size_t> all(domain_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> current;
    expand(current, all);
    std::vector<std::vector<Elem>> out;
    for (const auto& c : found_) {
      std::vector<Elem> s;
      for (auto i : c) s.push_back(domain_[i]);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(std::vector<std::size_t>& current, const std::vector<std::size_t>& cand) {
    if (current.size() + cand.size() < best_) return;
    if (target_ != 0 && current.size() == target_) {
      found_.push_back(current);
      return;
    }
    if (cand.empty()) {
      if (current.size() > best_) {
        best_ = current.size();
        found_.clear();
      }
      if (current.size() == best_) found_.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (current.size() + cand.size() - i < best_) return;
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (adj_[cand[i]][cand[j]]) next.push_back(cand[j]);
      }
      current.push_back(cand[i]);
      expand(current, next);
      current.pop_back();
    }
  }

  const std::vector<Elem>& domain_;
  std::vector<std::vector<char>> adj_;
  std::size_t target_ = 0;
  std::size_t best_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

std::vector<Elem> elements_where(const Field& f, bool (Field::*pred)(Elem) const noexcept) {
  std::vector<Elem> out;
  for (Elem a = 0; a < f.order(); ++a) {
    if ((f.*pred)(a)) out.push_back(a);
  }
  return out;
}

}  // namespace

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::NonzeroSquares: return "NonzeroSquares";
    case ElementClass::NonSquares: return "NonSquares";
    case ElementClass::NonSquaresWithZero: return "NonSquaresWithZero";
  }
  return "";
}

std::vector<std::vector<Elem>> maximum_nonsquare_difference_sets(const Field& f, const std::vector<Elem>& domain) {
  return CliqueSearch(f, domain).run(0);
}

std::vector<std::vector<Elem>> nonsquare_difference_sets(const Field& f, const std::vector<Elem>& domain,
                                                         std::size_t size) {
  if (size == 0) return {{}};
  return CliqueSearch(f, domain).run(size);
}

bool is_nonsquare_coset(const Field& f, unsigned q, const std::vector<Elem>& x, bool with_zero) {
  const auto it = std::find_if(x.begin(), x.end(), [](Elem e) { return e != 0; });
  if (it == x.end() || !f.is_nonsquare(*it)) return false;
  std::vector<Elem> coset;
  for (Elem u : f.subfield_elements(q)) {
    if (u != 0 || with_zero) coset.push_back(f.mul(*it, u));
  }
  std::sort(coset.begin(), coset.end());
  std::vector<Elem> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  return sorted == coset;
}

DiffSetReport lemma1_search(const Field& f) {
  square_root_order(f);
  DiffSetReport r;
  r.cls = ElementClass::NonzeroSquares;
  r.witnesses = maximum_nonsquare_difference_sets(f, elements_where(f, &Field::is_nonzero_square));
  r.max_size = r.witnesses.empty() ? 0 : r.witnesses.front().size();
  return r;
}

Lemma2Report lemma2_search(const Field& f) {
  const unsigned q = square_root_order(f);
  Lemma2Report r;
  r.q = q;

  const auto nonsquares = elements_where(f, &Field::is_nonsquare);
  std::vector<Elem> with_zero{0};
  with_zero.insert(with_zero.end(), nonsquares.begin(), nonsquares.end());

  auto fill = [&](DiffSetReport& d, ElementClass cls, const std::vector<Elem>& domain, bool zero) {
    d.cls = cls;
    d.witnesses = maximum_nonsquare_difference_sets(f, domain);
    d.max_size = d.witnesses.empty() ? 0 : d.witnesses.front().size();
    d.all_maximal_are_cosets = std::all_of(d.witnesses.begin(), d.witnesses.end(), [&](const auto& w) {
      return is_nonsquare_coset(f, q, w, zero);
    });
  };
  fill(r.strict, ElementClass::NonSquares, nonsquares, false);
  fill(r.zero_allowed, ElementClass::NonSquaresWithZero, with_zero, true);

  const auto strict_q = nonsquare_difference_sets(f, nonsquares, q);
  const auto zero_q = nonsquare_difference_sets(f, with_zero, q);
  r.strict_size_q = strict_q.size();
  r.zero_allowed_size_q = zero_q.size();

  r.coset_with_zero_holds = !zero_q.empty() && std::all_of(zero_q.begin(), zero_q.end(), [&](const auto& w) {
    return is_nonsquare_coset(f, q, w, true);
  });
  r.coset_without_zero_holds = !strict_q.empty() && std::all_of(strict_q.begin(), strict_q.end(), [&](auto w) {
    std::erase(w, Elem{0});
    return is_nonsquare_coset(f, q, w, false);
  });
  if (r.coset_with_zero_holds && r.coset_without_zero_holds) {
    r.convention = "both";
  } else if (r.coset_with_zero_holds) {
    r.convention = "zero-included";
  } else if (r.coset_without_zero_holds) {
    r.convention = "zero-excluded";
  } else {
    r.convention = "neither";
  }
  return r;
}

}  // namespace unitals
