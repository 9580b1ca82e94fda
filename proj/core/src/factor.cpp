#include "fencemonoid/factor.hpp"

#include <algorithm>
#include <string>

#include "fencemonoid/error.hpp"
#include "fencemonoid/fence.hpp"
#include "fencemonoid/generator_words.hpp"
#include "fencemonoid/genfam.hpp"

namespace fencemonoid {

namespace {

bool same_parity(int x, int y) { return ((x - y) & 1) == 0; }

[[noreturn]] void bad_indices(std::string_view what, int n, int m, int p, int k) {
  throw Error(ErrorCode::BadIndices, std::string(what) + " with n=" + std::to_string(n) +
                                         " m=" + std::to_string(m) + " p=" + std::to_string(p) +
                                         " k=" + std::to_string(k));
}

// The map x -> f(x) on [m, m + p], fixed on 1..m-2 and on from..n.
template <typename F>
PartialInjection interval_map(int n, int m, int p, int from, F f) {
  PartialInjectionBuilder b(n);
  for (int x = 1; x <= m - 2; ++x) b.set(x, x);
  for (int x = m; x <= m + p; ++x) b.set(x, f(x));
  for (int x = from; x <= n; ++x) b.set(x, x);
  return b.value();
}

Word single(int n, const PartialInjection& a) {
  Word w{n, {}};
  w.append(a);
  return w;
}

PartialInjection rev_element(int n, int lo, int hi) { return build_reversal(n, lo, hi - lo).element; }

Word rev_word(int n, int lo, int hi) { return build_reversal(n, lo, hi - lo).word; }

// 1 -> a, x -> x - 2 on [3, a], fixed from a + 2; a even.
PartialInjection shift_to_front(int n, int a) {
  PartialInjectionBuilder b(n);
  b.set(1, a);
  for (int x = 3; x <= a; ++x) b.set(x, x - 2);
  for (int x = a + 2; x <= n; ++x) b.set(x, x);
  return b.value();
}

int smallest_mismatch(const PartialInjection& a, int parity) {
  for (int x = 1; x <= a.degree(); ++x) {
    if ((x & 1) == parity && a.defined(x) && !same_parity(x, a[x])) return x;
  }
  return 0;
}

std::vector<BlockPair> block_pairs(const PartialInjection& a) {
  std::vector<BlockPair> pairs;
  for (const Block& d : blocks(a.degree(), a.domain_set())) {
    int lo = a[d.start];
    int hi = a[d.last()];
    BlockPair bp;
    bp.domain = d;
    bp.image = Block{std::min(lo, hi), d.length};
    bp.reversed = d.length > 1 && lo > hi;
    pairs.push_back(bp);
  }
  return pairs;
}

bool block_fixed(const BlockPair& bp) { return bp.domain == bp.image && !bp.reversed; }

// The lemma map taking [m, m+p] onto [m+d, m+p+d], d >= 0, with the given
// orientation; d == 0 only for reversals.
BuiltElement block_mover(int n, int m, int p, int d, bool reversed) {
  if (!reversed) return build_shift_word(n, ShiftKind::Shift2k, m, p, d / 2);
  if (p % 2 == 1) return build_shift_word(n, ShiftKind::RevShift2k, m, p, (d + 1) / 2);
  if (d == 0) return build_reversal(n, m, p);
  return build_shift_word(n, ShiftKind::RevShiftEven, m, p, d / 2);
}

PartialInjection apply(const Conjugators& c, const PartialInjection& a) {
  return eval_word(c.left) * a * eval_word(c.right);
}

// dom a inside im(left), im a inside dom(right): a can be recovered.
bool recoverable(const Conjugators& c, const PartialInjection& a) {
  PointSet dom = a.domain_set();
  PointSet im = a.image_set();
  return (dom & ~eval_word(c.left).image_set()) == 0 && (im & ~eval_word(c.right).domain_set()) == 0;
}

std::optional<BlockForm> try_form(const PartialInjection& a, int i) {
  try {
    return BlockForm::of(a, i);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::Shift2: return "shift2";
    case ShiftKind::Shift2k: return "shift2k";
    case ShiftKind::RevShift: return "revshift";
    case ShiftKind::RevShift2k: return "revshift2k";
    case ShiftKind::RevShiftEven: return "revshifteven";
  }
  return "?";
}

BuiltElement build_reversal(int n, int m, int p) {
  if (n < 1 || n > kMaxDegree || m < 1 || p < 0 || p % 2 != 0 || m + p > n) {
    bad_indices("reversal", n, m, p, 0);
  }
  PartialInjection e = interval_map(n, m, p, m + p + 2, [&](int x) { return 2 * m + p - x; });
  return {e, single(n, e)};
}

BuiltElement build_shift_word(int n, ShiftKind kind, int m, int p, int k) {
  if (n < 1 || n > kMaxDegree || m < 1 || p < 0) bad_indices(to_string(kind), n, m, p, k);
  Word w{n, {}};
  PartialInjection target;
  switch (kind) {
    case ShiftKind::Shift2: {
      if (m + p + 2 > n) bad_indices("shift2", n, m, p, k);
      target = interval_map(n, m, p, m + p + 4, [](int x) { return x + 2; });
      if (p % 2 == 0) {
        w.append(rev_word(n, m, m + p + 2));
        w.append(rev_word(n, m + 2, m + p + 2));
        w.append(GeneratorSpec::eps(m));
      } else {
        w.append(rev_word(n, m, m + p + 1));
        w.append(rev_word(n, m + 1, m + p + 2));
      }
      break;
    }
    case ShiftKind::Shift2k: {
      if (k < 1 || m + p + 2 * k > n) bad_indices("shift2k", n, m, p, k);
      target = interval_map(n, m, p, m + p + 2 * k + 2, [&](int x) { return x + 2 * k; });
      for (int i = 0; i < k; ++i) w.append(build_shift_word(n, ShiftKind::Shift2, m + 2 * i, p).word);
      break;
    }
    case ShiftKind::RevShift: {
      if (p % 2 == 0) throw Error(ErrorCode::KindMismatch, "revshift needs odd p");
      if (m + p + 1 > n) bad_indices("revshift", n, m, p, k);
      target = interval_map(n, m, p, m + p + 3, [&](int x) { return 2 * m + p + 1 - x; });
      w.append(rev_word(n, m, m + p + 1));
      w.append(GeneratorSpec::eps(m));
      break;
    }
    case ShiftKind::RevShift2k: {
      if (p % 2 == 0) throw Error(ErrorCode::KindMismatch, "revshift2k needs odd p");
      if (k < 1 || m + p + 2 * k - 1 > n) bad_indices("revshift2k", n, m, p, k);
      target = interval_map(n, m, p, m + p + 2 * k + 1,
                            [&](int x) { return 2 * m + p + 2 * k - 1 - x; });
      if (k > 1) w.append(build_shift_word(n, ShiftKind::Shift2k, m, p, k - 1).word);
      w.append(build_shift_word(n, ShiftKind::RevShift, m + 2 * k - 2, p).word);
      break;
    }
    case ShiftKind::RevShiftEven: {
      if (p % 2 != 0) throw Error(ErrorCode::KindMismatch, "revshifteven needs even p");
      if (k < 1 || m + p + 2 * k > n) bad_indices("revshifteven", n, m, p, k);
      target = interval_map(n, m, p, m + p + 2 * k + 2,
                            [&](int x) { return 2 * m + p + 2 * k - x; });
      w.append(build_shift_word(n, ShiftKind::Shift2k, m, p, k).word);
      w.append(rev_word(n, m + 2 * k, m + p + 2 * k));
      break;
    }
  }
  if (eval_word(w) != target) {
    throw std::logic_error("shift word for " + std::string(to_string(kind)) + " does not evaluate to its target");
  }
  return {target, std::move(w)};
}

Word partial_identity_word(int n, PointSet removed) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(n));
  PointSet all = ((PointSet{1} << (n + 1)) - 1) & ~PointSet{1};
  if ((removed & ~all) != 0) throw Error(ErrorCode::OutOfRange, "point outside 1.." + std::to_string(n));
  Word w{n, {}};
  for (int x : points_of(removed)) w.append(GeneratorSpec::eps(x));
  return w;
}

int parity_mismatches(const PartialInjection& a) {
  int count = 0;
  for (int x = 1; x <= a.degree(); ++x) {
    if (a.defined(x) && !same_parity(x, a[x])) ++count;
  }
  return count;
}

ParityNormalized parity_normalize(const PartialInjection& a) {
  if (!in_if(a)) throw Error(ErrorCode::NotInIF, to_string(a));
  int n = a.degree();
  ParityNormalized out{Word{n, {}}, Word{n, {}}, a};
  for (int step = 0; step <= n; ++step) {
    if (int x = smallest_mismatch(out.core, 0); x != 0) {
      PartialInjection eta = shift_to_front(n, x);
      out.core = eta * out.core;
      out.left.prepend(single(n, eta));
    } else if (int y = smallest_mismatch(out.core, 1); y != 0) {
      PartialInjection eta = inverse(shift_to_front(n, out.core[y]));
      out.core = out.core * eta;
      out.right.append(eta);
    } else {
      break;
    }
  }
  return out;
}

BlockForm BlockForm::of(const PartialInjection& a, int first_moving) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::MalformedBlockForm, why + " in " + to_string(a));
  };
  if (!in_if(a)) fail("not in IF");
  if (parity_mismatches(a) != 0) fail("not parity-normalised");
  BlockForm form{a, first_moving, block_pairs(a)};
  if (first_moving < 1 || first_moving > form.block_count()) fail("block index out of range");
  for (int j = 1; j < first_moving; ++j) {
    if (!block_fixed(form.pair(j))) fail("block " + std::to_string(j) + " not fixed");
  }
  if (first_moving > 1) {
    int bound = form.pair(first_moving - 1).s();
    for (int l = first_moving; l <= form.block_count(); ++l) {
      if (form.pair(l).t() <= bound) fail("image block " + std::to_string(l) + " below a fixed block");
    }
  }
  return form;
}

Conjugators align_first_block(const BlockForm& form) {
  const PartialInjection& a = form.element;
  int n = a.degree();
  int i = form.first_moving;
  int k = i;
  for (int l = i + 1; l <= form.block_count(); ++l) {
    if (form.pair(l).t() < form.pair(k).t()) k = l;
  }
  Conjugators c{Word{n, {}}, Word{n, {}}, 0};
  if (k == i) return c;

  PointSet dom = a.domain_set();
  PointSet im = a.image_set();
  int ri = form.pair(i).r();
  int ui = form.pair(i).u();
  int sk = form.pair(k).s();
  int tk = form.pair(k).t();

  if (same_parity(ri, sk)) {
    c.left = rev_word(n, ri, sk);
    c.construction = 1;
  } else if (ri >= 2 && !contains(dom, ri - 2)) {
    c.left = rev_word(n, ri - 1, sk);
    c.construction = 2;
  } else if (sk + 1 <= n && !contains(dom, sk + 2)) {
    c.left = rev_word(n, ri, sk + 1);
    c.construction = 3;
  } else if (same_parity(ui, tk)) {
    c.right = rev_word(n, tk, ui);
    c.construction = 4;
  } else if (tk >= 2 && !contains(im, tk - 2)) {
    c.right = rev_word(n, tk - 1, ui);
    c.construction = 5;
  } else if (ui + 1 <= n && !contains(im, ui + 2)) {
    c.right = rev_word(n, tk, ui + 1);
    c.construction = 6;
  } else if (k == i + 1) {
    const BlockPair& next = form.pair(i + 1);
    c.left = rev_word(n, ri, next.s() - 1);
    c.left.append(build_shift_word(n, ShiftKind::RevShift, next.r() - 1, next.s() - next.r()).word);
    c.construction = 71;
  } else {
    int r_next = form.pair(i + 1).r();
    int lo = same_parity(r_next, sk) ? r_next : r_next - 1;
    PartialInjection tau = rev_element(n, lo, sk);
    Conjugators inner = align_first_block(BlockForm::of(tau * a, i));
    c.left = std::move(inner.left);
    c.left.append(tau);
    c.right = std::move(inner.right);
    c.construction = 72;
  }
  return c;
}

Conjugators fix_first_block(const BlockForm& form) {
  int n = form.element.degree();
  Conjugators c{Word{n, {}}, Word{n, {}}, 0};
  const BlockPair& bp = form.pair(form.first_moving);
  if (block_fixed(bp)) return c;
  int p = bp.domain.length - 1;
  if (bp.r() >= bp.t()) {
    c.left = block_mover(n, bp.t(), p, bp.r() - bp.t(), bp.reversed).word;
    c.construction = 1;
  } else {
    c.right = inverse_word(block_mover(n, bp.r(), p, bp.t() - bp.r(), bp.reversed).word);
    c.construction = 2;
  }
  return c;
}

Word factorize_bfs(const SemigroupTable& s, const PartialInjection& a) {
  auto pos = s.position(a);
  if (!pos) throw Error(ErrorCode::NotMember, to_string(a));
  Word w{s.degree(), {}};
  for (std::size_t g : s.word(*pos)) w.append(s.generators()[g]);
  return w;
}

Factorizer::Factorizer(int n, unsigned threads) : n_(n), threads_(threads) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(n));
}

Factorizer::~Factorizer() = default;
Factorizer::Factorizer(Factorizer&&) noexcept = default;
Factorizer& Factorizer::operator=(Factorizer&&) noexcept = default;

const SemigroupTable& Factorizer::j_closure() {
  if (!j_table_) {
    auto gens = set_J(n_);
    j_table_ = std::make_unique<SemigroupTable>(closure(n_, gens, ClosureOptions{threads_, true, {}}));
  }
  return *j_table_;
}

const SemigroupTable& Factorizer::g_closure() {
  if (!g_table_) g_table_ = std::make_unique<SemigroupTable>(closure_of_g(n_, threads_));
  return *g_table_;
}

std::optional<Word> Factorizer::constructive_j(const PartialInjection& a, bool rank_shortcut) const {
  if (a.degree() != n_ || !in_if(a)) return std::nullopt;
  Word empty{n_, {}};
  if (a.is_identity()) return empty;
  if (rank_shortcut && a.rank() >= n_ - 2) return single(n_, a);

  try {
    ParityNormalized pn = parity_normalize(a);
    Conjugators acc{pn.left, pn.right, 0};
    if (!recoverable(acc, a) || parity_mismatches(pn.core) != 0) return std::nullopt;
    PartialInjection core = pn.core;
    int p = static_cast<int>(blocks(n_, core.domain_set()).size());

    for (int i = 1; i <= p; ++i) {
      BlockForm form = BlockForm::of(core, i);
      Conjugators al = align_first_block(form);
      if (!recoverable(al, core)) return std::nullopt;
      PartialInjection aligned = apply(al, core);
      auto next = try_form(aligned, i);
      if (!next || next->block_count() != p) return std::nullopt;
      for (int l = i + 1; l <= p; ++l) {
        if (next->pair(l).t() <= next->pair(i).t()) return std::nullopt;
      }

      Conjugators fx = fix_first_block(*next);
      if (!recoverable(fx, aligned)) return std::nullopt;
      PartialInjection fixed = apply(fx, aligned);
      if (i < p) {
        if (!try_form(fixed, i + 1)) return std::nullopt;
      } else if (!fixed.is_partial_identity()) {
        return std::nullopt;
      }

      acc.left.prepend(al.left);
      acc.left.prepend(fx.left);
      acc.right.append(al.right);
      acc.right.append(fx.right);
      core = fixed;
    }
    if (!core.is_partial_identity()) return std::nullopt;

    PointSet all = ((PointSet{1} << (n_ + 1)) - 1) & ~PointSet{1};
    Word w = inverse_word(acc.left);
    w.append(partial_identity_word(n_, all & ~core.domain_set()));
    w.append(inverse_word(acc.right));
    if (eval_word(w) != a) return std::nullopt;
    return w;
  } catch (const Error&) {
    return std::nullopt;
  }
}

Factorization Factorizer::factorize_j(const PartialInjection& a) {
  if (a.degree() != n_) {
    throw Error(ErrorCode::SizeMismatch, "degree " + std::to_string(a.degree()) + " vs " + std::to_string(n_));
  }
  if (!in_if(a)) throw Error(ErrorCode::NotInIF, to_string(a));
  if (auto w = constructive_j(a)) return {std::move(*w), false};
  ++fallbacks_;
  return {factorize_bfs(j_closure(), a), true};
}

Factorization Factorizer::factorize_g(const PartialInjection& a) {
  if (n_ % 2 != 0) throw Error(ErrorCode::OddAmbient, "G words need even n, got " + std::to_string(n_));
  if (a.degree() != n_) {
    throw Error(ErrorCode::SizeMismatch, "degree " + std::to_string(a.degree()) + " vs " + std::to_string(n_));
  }
  if (!in_if(a)) throw Error(ErrorCode::NotInIF, to_string(a));
  // Without the one-letter shortcut every letter is a reversal, shift or
  // eps, which is what the identity table covers.
  Factorization j;
  if (auto w = constructive_j(a, false)) {
    j = {std::move(*w), false};
  } else {
    ++fallbacks_;
    j = {factorize_bfs(j_closure(), a), true};
  }
  Factorization out{Word{n_, {}}, j.used_fallback};
  for (const Letter& letter : j.word.letters) {
    GWord g = g_word_for(n_, eval_letter(n_, letter), g_closure());
    if (!g.from_identity_table) ++g_misses_;
    out.word.append(g.word);
  }
  return out;
}

}  // namespace fencemonoid
