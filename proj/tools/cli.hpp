#pragma once

#include "edr/edr.hpp"
#include "edr/serialize.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace edr::cli {

enum ExitCode : int { Ok = 0, UsageError = 1, Failure = 2 };

struct Invocation {
  std::string command;
  std::string ring;
  std::string matrix;
  std::string out;
  std::uint64_t seed = 0;
  std::string row, det, a, b, c, cert, predicate;
  long bound = 50;
  bool pi = false, sr2 = false, idempotent = false;
};

namespace detail {

using edr::json::Json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void emit(const Invocation& inv, const Json& doc, std::ostream& out) {
  std::string text = doc.dump(2) + "\n";
  if (inv.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(inv.out, std::ios::binary);
  if (!file) throw ParseError(0, "cannot write file '" + inv.out + "'");
  file << text;
}

inline RingDescriptor ring_flag(const Invocation& inv) {
  if (inv.ring.empty()) throw ParseError(0, "--ring is required");
  return parse_descriptor(inv.ring);
}

inline RingMatrix matrix_flag(const Invocation& inv) {
  if (inv.matrix.empty()) throw ParseError(0, "--matrix is required");
  auto m = parse_matrix_text(read_file(inv.matrix));
  if (!inv.ring.empty() && !(parse_descriptor(inv.ring) == m.ring())) {
    fail(ErrorCode::DescriptorMismatch,
         "--ring " + inv.ring + " but matrix file declares " + m.ring().to_string());
  }
  return m;
}

inline RingElement element_flag(const RingDescriptor& ring, const std::string& text, const char* name) {
  if (text.empty()) throw ParseError(0, std::string(name) + " is required");
  return parse_element(ring, text);
}

inline int do_reduce(const Invocation& inv, std::ostream& out) {
  emit(inv, json::reduction(diagonal_reduce(matrix_flag(inv))), out);
  return Ok;
}

inline int do_complete(const Invocation& inv, std::ostream& out) {
  auto ring = ring_flag(inv);
  if (inv.row.empty()) throw ParseError(0, "--row is required");
  auto row = parse_element_list(ring, inv.row);
  auto d = element_flag(ring, inv.det, "--det");
  auto cert = inv.idempotent ? idempotent_complete(row, d) : complete_row(row, d);
  emit(inv, json::completion(cert), out);
  return Ok;
}

inline int do_split(const Invocation& inv, std::ostream& out) {
  auto ring = ring_flag(inv);
  auto a = element_flag(ring, inv.a, "--a");
  auto b = element_flag(ring, inv.b, "--b");
  if (ring.kind() == RingKind::TruncatedSeries) {
    emit(inv, json::series_split(a, b, truncated_series_split(a, b)), out);
  } else {
    auto s = inv.pi ? pi_adequate_split_zn(a, b) : adequate_split(a, b);
    emit(inv, json::split(a, b, s), out);
  }
  return Ok;
}

inline int do_lift(const Invocation& inv, std::ostream& out) {
  auto ring = ring_flag(inv);
  auto a = element_flag(ring, inv.a, "--a");
  auto b = element_flag(ring, inv.b, "--b");
  auto c = element_flag(ring, inv.c, "--c");
  Json doc = {{"kind", inv.sr2 ? "sr2" : "sr1"}, {"ring", ring.to_string()},
              {"a", json::element(a)}, {"b", json::element(b)}, {"c", json::element(c)}};
  if (inv.sr2) {
    auto [y1, y2] = sr2_reduce(a, b, c);
    doc["y1"] = json::element(y1);
    doc["y2"] = json::element(y2);
    doc["comaximal"] = comaximal(a + c * y1, b + c * y2);
  } else {
    auto y = sr1_quotient_lift(a, b, c);
    doc["y"] = json::element(y);
    doc["comaximal"] = comaximal(a, b + c * y);
  }
  emit(inv, doc, out);
  return Ok;
}

inline int do_check(const Invocation& inv, std::ostream& out) {
  auto ring = ring_flag(inv);
  if (inv.predicate == "CleanQuotient") {
    emit(inv, json::predicate(ring, check_clean_quotient(element_flag(ring, inv.a, "--a"))), out);
    return Ok;
  }
  if (inv.predicate == "BoundedSR1") {
    auto report = bounded_refute_sr1(element_flag(ring, inv.a, "--a"), element_flag(ring, inv.b, "--b"),
                                     element_flag(ring, inv.c, "--c"), inv.bound);
    emit(inv, json::predicate(ring, report), out);
    return Ok;
  }
  auto p = predicate_from_string(inv.predicate);
  if (!p) throw ParseError(0, "unknown predicate '" + inv.predicate + "'");
  emit(inv, json::predicate(ring, check_finite_predicate(ring, *p)), out);
  return Ok;
}

inline int do_verify(const Invocation& inv, std::ostream& out) {
  if (inv.cert.empty()) throw ParseError(0, "--cert is required");
  auto doc = json::parse_document(read_file(inv.cert));
  if (!inv.ring.empty() && !(parse_descriptor(inv.ring) == json::ring_of(doc))) {
    fail(ErrorCode::DescriptorMismatch, "--ring " + inv.ring + " but certificate declares " +
                                            json::ring_of(doc).to_string());
  }
  std::string kind = doc.contains("kind") && doc["kind"].is_string() ? doc["kind"].get<std::string>()
                                                                     : "reduction";
  VerificationReport report;
  if (kind == "reduction") {
    auto source = matrix_flag(inv);
    auto cert = json::reduction_from(doc);
    if (!(cert.D.ring() == source.ring())) {
      fail(ErrorCode::DescriptorMismatch, "certificate and matrix use different rings");
    }
    report = verify_reduction(source, cert);
  } else if (kind == "completion") {
    report = verify_completion(json::completion_from(doc));
  } else {
    throw ParseError(0, "unknown certificate kind '" + kind + "'");
  }
  emit(inv, json::verification(report), out);
  return report.holds ? Ok : Failure;
}

inline int dispatch(const Invocation& inv, std::ostream& out) {
  if (inv.command == "reduce") return do_reduce(inv, out);
  if (inv.command == "complete") return do_complete(inv, out);
  if (inv.command == "split") return do_split(inv, out);
  if (inv.command == "lift") return do_lift(inv, out);
  if (inv.command == "check") return do_check(inv, out);
  return do_verify(inv, out);
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Exact diagonal reduction over Bezout rings", "edr"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", inv.ring, "ring descriptor");
    sub->add_option("--matrix", inv.matrix, "matrix text file");
    sub->add_option("--out", inv.out, "write the document here instead of stdout");
    sub->add_option("--seed", inv.seed, "seed for randomized internals");
    return sub;
  };
  common(app.add_subcommand("reduce", "diagonal reduction certificate for a matrix"));
  auto* complete = common(app.add_subcommand("complete", "complete a row to a square matrix"));
  complete->add_option("--row", inv.row, "comma separated first row");
  complete->add_option("--det", inv.det, "target determinant");
  complete->add_flag("--idempotent", inv.idempotent, "det is an idempotent in the row ideal");
  auto* split = common(app.add_subcommand("split", "adequate split of a against b"));
  split->add_option("--a", inv.a);
  split->add_option("--b", inv.b);
  split->add_flag("--pi", inv.pi, "power split over Z/n");
  auto* lift = common(app.add_subcommand("lift", "stable range lift"));
  lift->add_option("--a", inv.a);
  lift->add_option("--b", inv.b);
  lift->add_option("--c", inv.c);
  lift->add_flag("--sr2", inv.sr2, "reduce a unimodular triple to a pair");
  auto* check = common(app.add_subcommand("check", "decide a ring predicate"));
  check->add_option("--predicate", inv.predicate,
                    "StableRange1, Clean, PmRing, JStableCondition, CleanQuotient or BoundedSR1")
      ->required();
  check->add_option("--a", inv.a);
  check->add_option("--b", inv.b);
  check->add_option("--c", inv.c);
  check->add_option("--bound", inv.bound, "search bound for BoundedSR1");
  auto* verify = common(app.add_subcommand("verify", "check a certificate"));
  verify->add_option("--cert", inv.cert, "certificate JSON file")->required();

  std::vector<std::string> argv_store{"edr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }
  inv.command = app.get_subcommands().front()->get_name();

  try {
    return detail::dispatch(inv, out);
  } catch (const ParseError& e) {
    out << json::error(e).dump(2) << "\n";
    err << "edr: " << e.what() << "\n";
    return UsageError;
  } catch (const Error& e) {
    out << json::error(e).dump(2) << "\n";
    err << "edr: " << e.what() << "\n";
    return Failure;
  }
}

}  // namespace edr::cli
