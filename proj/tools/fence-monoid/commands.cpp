#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "fencemonoid/cache.hpp"
#include "fencemonoid/error.hpp"
#include "fencemonoid/factor.hpp"
#include "fencemonoid/fence.hpp"

namespace fencemonoid::cli {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

PartialInjection parse_element(int n, const std::string& text) {
  PartialInjection a = parse_pinj(text);
  if (a.degree() != n) {
    throw Error(ErrorCode::SizeMismatch,
                text + " has degree " + std::to_string(a.degree()) + ", expected " + std::to_string(n));
  }
  return a;
}

PartialInjection parse_if_element(int n, const std::string& text) {
  PartialInjection a = parse_element(n, text);
  if (!in_if(a)) throw Error(ErrorCode::NotInIF, text);
  return a;
}

void check_guard(int n, const Common& common) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
  if (n > kBuildGuard) throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n) + " exceeds " + std::to_string(kBuildGuard));
  if (n > kDefaultGuard && !common.huge) {
    throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n) + " needs --huge");
  }
}

std::string invariant_text(const PartialInjection& a) {
  std::string s = to_string(j_invariant(a));
  return s.empty() ? "-" : s;
}

// Number of classes of the relation on the table.
std::size_t class_count(const SemigroupTable& s, Relation rel) {
  std::set<std::pair<PointSet, PointSet>> keys;
  std::set<JInvariant> invs;
  for (const auto& a : s) {
    switch (rel) {
      case Relation::R: keys.emplace(a.domain_set(), 0); break;
      case Relation::L: keys.emplace(0, a.image_set()); break;
      case Relation::H: keys.emplace(a.domain_set(), a.image_set()); break;
      case Relation::J:
      case Relation::D: invs.insert(j_invariant(a)); break;
    }
  }
  return rel == Relation::J || rel == Relation::D ? invs.size() : keys.size();
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violation: return "violation";
    case Status::Error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::Violation: return 2;
    case Status::Error: return 1;
  }
  return 1;
}

std::string render(const CommandResult& r, Format f) {
  if (f == Format::Json) {
    Json j;
    j["command"] = r.command;
    j["n"] = r.n;
    j["params"] = r.params;
    j["result"] = r.result;
    j["status"] = to_string(r.status);
    j["timing_ms"] = r.timing_ms;
    j["version"] = "v1";
    return j.dump(2) + "\n";
  }
  if (f == Format::Csv && !r.csv.empty()) return r.csv;
  return r.text;
}

SemigroupTable load_table(int n, Kind which, const Common& common) {
  check_guard(n, common);
  BuildOptions opts{common.threads};
  if (!common.use_cache) return build(n, which, opts);
  return cached_build(common.cache_dir, n, which, opts);
}

CommandResult error_result(std::string command, int n, const std::exception& e) {
  CommandResult r;
  r.command = std::move(command);
  r.n = n;
  r.status = Status::Error;
  std::string code = "Internal";
  if (const auto* fe = dynamic_cast<const Error*>(&e)) code = std::string(fencemonoid::to_string(fe->code()));
  r.result["error"] = code;
  r.result["message"] = e.what();
  r.text = std::string("error: ") + e.what() + "\n";
  return r;
}

CommandResult cmd_enumerate(const EnumerateArgs& args, const Common& common) {
  Stopwatch clock;
  CommandResult r;
  r.command = "enumerate";
  r.n = args.n;
  r.params["which"] = to_string(args.which);
  r.params["list"] = args.list;
  if (args.contains) r.params["contains"] = *args.contains;

  SemigroupTable table;
  if (args.import_from) {
    std::ifstream in(*args.import_from);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + args.import_from->string());
    StoredTable stored = read_table(in);
    if (stored.table.degree() != args.n || stored.kind != to_string(args.which)) {
      throw Error(ErrorCode::SizeMismatch, args.import_from->string() + " holds kind=" + stored.kind +
                                               " n=" + std::to_string(stored.table.degree()));
    }
    table = std::move(stored.table);
  } else {
    table = load_table(args.n, args.which, common);
  }
  if (args.export_to) {
    std::ofstream out(*args.export_to);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + args.export_to->string());
    write_table(out, table, to_string(args.which));
  }

  std::ostringstream text;
  std::ostringstream csv;
  std::string label = std::string(to_string(args.which)) + "_" + std::to_string(args.n);
  r.result["count"] = table.size();
  text << label << ": " << table.size() << " elements\n";
  if (args.contains) {
    PartialInjection a = parse_element(args.n, *args.contains);
    bool in = table.contains(a);
    r.result["contains"] = in;
    text << "contains " << to_string(a) << ": " << (in ? "true" : "false") << "\n";
  }
  if (args.list) {
    Json list = Json::array();
    csv << "index,element\n";
    std::size_t i = 0;
    for (const auto& a : table) {
      std::string s = to_string(a);
      text << s << "\n";
      csv << i++ << "," << s << "\n";
      list.push_back(s);
    }
    r.result["elements"] = std::move(list);
  } else {
    csv << "kind,n,count\n" << to_string(args.which) << "," << args.n << "," << table.size() << "\n";
  }
  r.text = text.str();
  r.csv = csv.str();
  r.timing_ms = clock.ms();
  return r;
}

CommandResult cmd_greens(const GreensArgs& args, const Common& common) {
  Stopwatch clock;
  CommandResult r;
  r.command = "greens";
  r.n = args.n;
  r.params["relation"] = to_string(args.relation);
  r.params["elements"] = args.elements;
  r.params["all"] = args.all;
  r.params["witness"] = args.witness;
  r.params["classes"] = args.classes;

  std::ostringstream text;
  std::vector<PartialInjection> elems;
  for (const auto& e : args.elements) elems.push_back(parse_if_element(args.n, e));

  Json items = Json::array();
  for (const auto& a : elems) {
    items.push_back({{"element", to_string(a)}, {"rank", a.rank()}, {"invariant", to_string(j_invariant(a))}});
    text << to_string(a) << "  rank " << a.rank() << "  invariant " << invariant_text(a) << "\n";
  }
  r.result["elements"] = std::move(items);

  Json pairs = Json::array();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const auto& a = elems[i];
      const auto& b = elems[j];
      bool related = green_test(args.relation, a, b);
      Json p{{"left", to_string(a)}, {"right", to_string(b)}, {"related", related}};
      text << to_string(args.relation) << "(" << to_string(a) << ", " << to_string(b) << "): "
           << (related ? "true" : "false") << "\n";
      if (args.witness && are_J_related(a, b)) {
        // b = gamma * a * delta
        JWitness w = j_witness(a, b);
        bool ok = w.left * a * w.right == b && in_if(w.left) && in_if(w.right);
        p["witness"] = {{"gamma", to_string(w.left)}, {"delta", to_string(w.right)}, {"verified", ok}};
        text << "  gamma " << to_string(w.left) << "\n  delta " << to_string(w.right) << "\n  verified "
             << (ok ? "true" : "false") << "\n";
        if (!ok) r.status = Status::Violation;
      }
      pairs.push_back(std::move(p));
    }
  }
  r.result["pairs"] = std::move(pairs);

  if (args.all || args.classes) {
    SemigroupTable table = load_table(args.n, Kind::IF, common);
    std::size_t count = class_count(table, args.relation);
    r.result["size"] = table.size();
    r.result["class_count"] = count;
    text << "IF_" << args.n << ": " << table.size() << " elements, " << count << " "
         << to_string(args.relation) << "-classes\n";
    if (args.classes) {
      JClasses jc = j_classes(table);
      Json rows = Json::array();
      std::ostringstream csv;
      csv << "class,invariant,rank,size,representative\n";
      for (std::size_t c = 0; c < jc.classes.size(); ++c) {
        const auto& rep = table[jc.classes[c].front()];
        std::string inv = to_string(jc.invariants[c]);
        rows.push_back({{"invariant", inv}, {"rank", rep.rank()}, {"size", jc.classes[c].size()},
                        {"representative", to_string(rep)}});
        text << "  " << (inv.empty() ? "-" : inv) << "  rank " << rep.rank() << "  size "
             << jc.classes[c].size() << "  " << to_string(rep) << "\n";
        csv << c << "," << inv << "," << rep.rank() << "," << jc.classes[c].size() << "," << to_string(rep) << "\n";
      }
      r.result["j_classes"] = std::move(rows);
      r.csv = csv.str();
    }
  }
  r.text = text.str();
  r.timing_ms = clock.ms();
  return r;
}

CommandResult cmd_factorize(const FactorizeArgs& args, const Common& common) {
  Stopwatch clock;
  CommandResult r;
  r.command = "factorize";
  r.n = args.n;
  r.params["element"] = args.element;
  r.params["target"] = args.target_g ? "G" : "J";
  r.params["verify"] = args.verify;

  check_guard(args.n, common);
  PartialInjection a = parse_if_element(args.n, args.element);
  Factorizer f(args.n, common.threads);
  Factorization fz = args.target_g ? f.factorize_g(a) : f.factorize_j(a);

  std::ostringstream text;
  r.result["word"] = to_string(fz.word);
  r.result["length"] = fz.word.length();
  r.result["fallback"] = fz.used_fallback;
  r.result["fallback_count"] = f.fallback_count();
  if (args.target_g) r.result["g_table_misses"] = f.g_table_misses();
  text << to_string(fz.word) << "\n"
       << "length " << fz.word.length() << "\n"
       << "fallback " << (fz.used_fallback ? "true" : "false") << " (count " << f.fallback_count() << ")\n";
  if (args.verify) {
    bool ok = eval_word(fz.word) == a;
    r.result["verified"] = ok;
    text << "verified " << (ok ? "true" : "false") << "\n";
    if (!ok) r.status = Status::Violation;
  }
  r.text = text.str();
  r.timing_ms = clock.ms();
  return r;
}

}  // namespace fencemonoid::cli
