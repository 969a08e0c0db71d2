// hrpb command-line tool: generate, compress, inspect, search, evaluate.
//
// Exit codes: 0 success, 1 usage error (flags), 2 data error (file contents,
// shapes, arithmetic preconditions).

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrpb/hrpb.hpp"

namespace {

using nlohmann::ordered_json;

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  return buf;
}

std::string rate_string(double rate) { return fixed(rate, 6); }
std::string reduction_string(double percent) { return fixed(percent, 2) + "%"; }

hrpb::Method parse_method(const std::string& name) {
  return name == "sigmoid" ? hrpb::Method::sigmoid : hrpb::Method::hrp;
}

// Comma-separated positive integers; empty tokens and garbage are usage
// errors, signalled by returning an empty list.
std::vector<std::uint32_t> parse_bits_list(const std::string& text) {
  std::vector<std::uint32_t> bits;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      return {};
    }
    if (used != token.size() || v == 0 || v > 0xFFFFFFFFul) return {};
    bits.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return bits;
}

struct GenArgs {
  std::uint32_t dim = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

int run_gen(const GenArgs& a) {
  const auto corpus = hrpb::synthetic::gaussian_corpus(
      a.dim, static_cast<std::size_t>(a.count), a.seed);
  const std::uint64_t bytes = hrpb::io::write_fvecs(a.out, corpus);
  if (a.json) {
    ordered_json j{{"out", a.out},
                   {"dim", a.dim},
                   {"count", a.count},
                   {"seed", a.seed},
                   {"bytes", bytes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "out=" << a.out << " dim=" << a.dim << " count=" << a.count
              << " seed=" << a.seed << " bytes=" << bytes << "\n";
  }
  return 0;
}

struct CompressArgs {
  std::string in;
  std::string out;
  std::uint32_t bits = 0;
  std::uint64_t seed = 0;
  std::string method = "hrp";
  bool json = false;
};

int run_compress(const CompressArgs& a) {
  const auto xs = hrpb::io::read_vectors(a.in);
  if (xs.empty()) {
    throw hrpb::InvalidArgumentError("input '" + a.in +
                                     "' holds no embeddings");
  }
  hrpb::CompressionConfig config;
  config.method = parse_method(a.method);
  config.source_dim = xs[0].dim();
  config.target_bits = a.bits;
  config.seed = a.seed;

  const auto codes = hrpb::batch_quantize(xs, config);
  const hrpb::BinaryStore store(config, codes);
  hrpb::io::write_hrpb(a.out, store);

  const hrpb::MemoryReport report = hrpb::memory_consumption_rate(
      config.source_dim, config.target_bits, config.method);

  if (a.json) {
    ordered_json j{{"out", a.out},
                   {"method", hrpb::method_name(config.method)},
                   {"source_dim", config.source_dim},
                   {"bits", config.target_bits},
                   {"seed", config.seed},
                   {"count", store.size()},
                   {"rate", report.rate},
                   {"reduction_percent", report.reduction_percent}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "out=" << a.out
              << " method=" << hrpb::method_name(config.method)
              << " source_dim=" << config.source_dim
              << " bits=" << config.target_bits << " seed=" << config.seed
              << " count=" << store.size()
              << " rate=" << rate_string(report.rate)
              << " reduction=" << reduction_string(report.reduction_percent)
              << "\n";
  }
  return 0;
}

struct StatsArgs {
  std::string in;
  bool json = false;
};

int run_stats(const StatsArgs& a) {
  const hrpb::BinaryStore store = hrpb::io::read_hrpb(a.in);
  const auto& config = store.config();
  const hrpb::MemoryReport report = hrpb::memory_consumption_rate(
      config.source_dim, config.target_bits, config.method);

  if (a.json) {
    ordered_json j{{"version", hrpb::io::kHrpbVersion},
                   {"method", hrpb::method_name(config.method)},
                   {"source_dim", config.source_dim},
                   {"bits", config.target_bits},
                   {"seed", config.seed},
                   {"count", store.size()},
                   {"code_bytes", store.code_bytes()},
                   {"payload_bytes", store.payload().size()},
                   {"rate", report.rate},
                   {"reduction_percent", report.reduction_percent}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "version\t" << hrpb::io::kHrpbVersion << "\n"
              << "method\t" << hrpb::method_name(config.method) << "\n"
              << "source_dim\t" << config.source_dim << "\n"
              << "bits\t" << config.target_bits << "\n"
              << "seed\t" << config.seed << "\n"
              << "count\t" << store.size() << "\n"
              << "code_bytes\t" << store.code_bytes() << "\n"
              << "payload_bytes\t" << store.payload().size() << "\n"
              << "rate\t" << rate_string(report.rate) << "\n"
              << "reduction\t" << reduction_string(report.reduction_percent)
              << "\n";
  }
  return 0;
}

struct KnnArgs {
  std::string store;
  std::string query;
  std::uint64_t k = 0;
  bool json = false;
};

int run_knn(const KnnArgs& a) {
  const hrpb::BinaryStore store = hrpb::io::read_hrpb(a.store);
  const auto queries = hrpb::io::read_vectors(a.query);
  if (queries.empty()) {
    throw hrpb::InvalidArgumentError("query file '" + a.query +
                                     "' holds no embeddings");
  }
  const auto codes = hrpb::batch_quantize(queries, store.config());

  ordered_json out = ordered_json::array();
  for (std::size_t q = 0; q < codes.size(); ++q) {
    const auto hits =
        hrpb::knn(store, codes[q], static_cast<std::size_t>(a.k));
    if (a.json) {
      ordered_json row = ordered_json::array();
      for (const auto& hit : hits) {
        row.push_back(ordered_json{{"id", hit.id}, {"distance", hit.distance}});
      }
      out.push_back(std::move(row));
    } else {
      for (const auto& hit : hits) {
        std::cout << q << "\t" << hit.id << "\t" << hit.distance << "\n";
      }
    }
  }
  if (a.json) std::cout << out.dump(2) << "\n";
  return 0;
}

struct EvalStsArgs {
  std::string a_path;
  std::string b_path;
  std::string gold_path;
  std::string bits = "256,384,512,768,1024,1536,2048";
  std::uint64_t seeds = 1;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_eval_sts(const EvalStsArgs& a) {
  const std::vector<std::uint32_t> bit_widths = parse_bits_list(a.bits);
  if (bit_widths.empty()) {
    std::cerr << "hrpb: --bits expects comma-separated positive integers\n";
    return 1;
  }

  const auto xs_a = hrpb::io::read_vectors(a.a_path);
  const auto xs_b = hrpb::io::read_vectors(a.b_path);
  const auto gold = hrpb::io::read_scalars_text(a.gold_path);
  if (xs_a.empty()) {
    throw hrpb::InvalidArgumentError("input '" + a.a_path +
                                     "' holds no embeddings");
  }

  double rho_float = 0.0;
  ordered_json sweep = ordered_json::array();
  std::vector<std::string> rows;

  for (std::size_t bi = 0; bi < bit_widths.size(); ++bi) {
    double mean = 0.0, lo = 0.0, hi = 0.0;
    for (std::uint64_t s = 0; s < a.seeds; ++s) {
      hrpb::CompressionConfig config;
      config.method = hrpb::Method::hrp;
      config.source_dim = xs_a[0].dim();
      config.target_bits = bit_widths[bi];
      config.seed = a.seed + s;
      const hrpb::eval::StsResult r =
          hrpb::eval::sts_eval(xs_a, xs_b, gold, config);
      rho_float = r.rho_float;
      mean += r.rho_binary;
      lo = (s == 0) ? r.rho_binary : std::min(lo, r.rho_binary);
      hi = (s == 0) ? r.rho_binary : std::max(hi, r.rho_binary);
    }
    mean /= static_cast<double>(a.seeds);
    rows.push_back(std::to_string(bit_widths[bi]) + "\t" + fixed(mean, 4) +
                   "\t" + fixed(lo, 4) + "\t" + fixed(hi, 4));
    sweep.push_back(ordered_json{{"bits", bit_widths[bi]},
                                 {"mean", mean},
                                 {"min", lo},
                                 {"max", hi},
                                 {"runs", a.seeds}});
  }

  if (a.json) {
    ordered_json j{{"rho_float", rho_float}, {"sweep", std::move(sweep)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "float\t" << fixed(rho_float, 4) << "\n";
    for (const std::string& row : rows) std::cout << row << "\n";
  }
  return 0;
}

struct EvalClfArgs {
  std::string features;
  std::string labels;
  std::uint32_t bits = 0;
  std::string protocol;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_eval_clf(const EvalClfArgs& a) {
  const auto xs = hrpb::io::read_vectors(a.features);
  auto labels = hrpb::io::read_labels_text(a.labels);
  if (labels.size() != xs.size()) {
    throw hrpb::ShapeError("label count " + std::to_string(labels.size()) +
                           " does not match embedding count " +
                           std::to_string(xs.size()));
  }
  if (xs.empty()) {
    throw hrpb::InvalidArgumentError("input '" + a.features +
                                     "' holds no embeddings");
  }

  hrpb::eval::TrainConfig train_cfg = a.protocol == "seeg"
                                          ? hrpb::eval::TrainConfig::seeg()
                                          : hrpb::eval::TrainConfig::senteval();
  train_cfg.seed = a.seed;

  const auto float_data = hrpb::eval::Dataset::from_embeddings(xs, labels);
  const auto float_res = hrpb::eval::cross_validate(float_data, train_cfg);

  hrpb::CompressionConfig ccfg;
  ccfg.method = hrpb::Method::hrp;
  ccfg.source_dim = xs[0].dim();
  ccfg.target_bits = a.bits;
  ccfg.seed = a.seed;
  const auto codes = hrpb::batch_quantize(xs, ccfg);
  const auto binary_data = hrpb::eval::Dataset::from_binary(codes, labels);
  const auto binary_res = hrpb::eval::cross_validate(binary_data, train_cfg);

  for (const std::string& w : float_res.warnings) {
    std::cerr << "warning: float run: " << w << "\n";
  }
  for (const std::string& w : binary_res.warnings) {
    std::cerr << "warning: binary run: " << w << "\n";
  }

  // The echo spells out the regime; seeg has no effective tenacity.
  std::string echo = "optimizer=";
  echo += hrpb::eval::optimizer_name(train_cfg.optimizer);
  echo += " batch=" + std::to_string(train_cfg.batch_size);
  if (a.protocol != "seeg") {
    echo += " tenacity=" + std::to_string(train_cfg.tenacity);
  }
  echo += " epochs=" + std::to_string(train_cfg.epochs);
  echo += " folds=" + std::to_string(train_cfg.folds);

  auto fold_list = [](const std::vector<double>& folds) {
    std::string s;
    for (std::size_t i = 0; i < folds.size(); ++i) {
      if (i > 0) s += ",";
      s += fixed(folds[i], 4);
    }
    return s;
  };

  if (a.json) {
    ordered_json j{
        {"config",
         ordered_json{{"protocol", a.protocol},
                      {"optimizer",
                       hrpb::eval::optimizer_name(train_cfg.optimizer)},
                      {"batch", train_cfg.batch_size},
                      {"tenacity", train_cfg.tenacity},
                      {"epochs", train_cfg.epochs},
                      {"folds", train_cfg.folds},
                      {"bits", a.bits},
                      {"seed", a.seed}}},
        {"float",
         ordered_json{{"mean", float_res.mean_accuracy},
                      {"folds", float_res.fold_accuracies}}},
        {"binary",
         ordered_json{{"mean", binary_res.mean_accuracy},
                      {"folds", binary_res.fold_accuracies}}}};
    ordered_json warnings = ordered_json::array();
    for (const auto& w : float_res.warnings) warnings.push_back("float: " + w);
    for (const auto& w : binary_res.warnings) {
      warnings.push_back("binary: " + w);
    }
    j["warnings"] = std::move(warnings);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "config: " << echo << " bits=" << a.bits
              << " seed=" << a.seed << "\n";
    std::cout << "float\t" << fixed(float_res.mean_accuracy, 4) << "\t"
              << fold_list(float_res.fold_accuracies) << "\n";
    std::cout << "binary\t" << fixed(binary_res.mean_accuracy, 4) << "\t"
              << fold_list(binary_res.fold_accuracies) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary embedding compression and evaluation"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic Gaussian corpus");
  gen_cmd->add_option("--dim", gen.dim, "embedding dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", gen.count, "number of embeddings")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
  gen_cmd->add_option("--out", gen.out, "output .fvecs path")->required();
  gen_cmd->add_flag("--json", gen.json, "JSON report");

  CompressArgs compress;
  auto* compress_cmd =
      app.add_subcommand("compress", "quantize float embeddings to a store");
  compress_cmd->add_option("--in", compress.in, "input embeddings")->required();
  compress_cmd->add_option("--out", compress.out, "output .hrpb path")
      ->required();
  compress_cmd->add_option("--bits", compress.bits, "code width in bits")
      ->required()
      ->check(CLI::PositiveNumber);
  compress_cmd->add_option("--seed", compress.seed, "projection seed")
      ->required();
  compress_cmd->add_option("--method", compress.method, "hrp or sigmoid")
      ->check(CLI::IsMember({"hrp", "sigmoid"}));
  compress_cmd->add_flag("--json", compress.json, "JSON report");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "describe a store");
  stats_cmd->add_option("--in", stats.in, "input .hrpb path")->required();
  stats_cmd->add_flag("--json", stats.json, "JSON report");

  KnnArgs knn_args;
  auto* knn_cmd =
      app.add_subcommand("knn", "exact Hamming nearest neighbors");
  knn_cmd->add_option("--store", knn_args.store, "store .hrpb path")
      ->required();
  knn_cmd->add_option("--query", knn_args.query, "query embeddings")
      ->required();
  knn_cmd->add_option("--k", knn_args.k, "neighbors per query")
      ->required()
      ->check(CLI::PositiveNumber);
  knn_cmd->add_flag("--json", knn_args.json, "JSON report");

  EvalStsArgs sts;
  auto* sts_cmd = app.add_subcommand(
      "eval-sts", "rank correlation of float vs binary similarities");
  sts_cmd->add_option("--a", sts.a_path, "left-side embeddings")->required();
  sts_cmd->add_option("--b", sts.b_path, "right-side embeddings")->required();
  sts_cmd->add_option("--gold", sts.gold_path, "gold scores, one per line")
      ->required();
  sts_cmd->add_option("--bits", sts.bits, "comma-separated code widths");
  sts_cmd->add_option("--seeds", sts.seeds, "projection seeds per width")
      ->check(CLI::PositiveNumber);
  sts_cmd->add_option("--seed", sts.seed, "base projection seed");
  sts_cmd->add_flag("--json", sts.json, "JSON report");

  EvalClfArgs clf;
  auto* clf_cmd = app.add_subcommand(
      "eval-clf", "cross-validated accuracy, float vs binary features");
  clf_cmd->add_option("--features", clf.features, "feature embeddings")
      ->required();
  clf_cmd->add_option("--labels", clf.labels, "labels, one per line")
      ->required();
  clf_cmd->add_option("--bits", clf.bits, "code width in bits")
      ->required()
      ->check(CLI::PositiveNumber);
  clf_cmd->add_option("--protocol", clf.protocol, "senteval or seeg")
      ->required()
      ->check(CLI::IsMember({"senteval", "seeg"}));
  clf_cmd->add_option("--seed", clf.seed, "shuffle and projection seed");
  clf_cmd->add_flag("--json", clf.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(gen_cmd)) return run_gen(gen);
    if (app.got_subcommand(compress_cmd)) return run_compress(compress);
    if (app.got_subcommand(stats_cmd)) return run_stats(stats);
    if (app.got_subcommand(knn_cmd)) return run_knn(knn_args);
    if (app.got_subcommand(sts_cmd)) return run_eval_sts(sts);
    if (app.got_subcommand(clf_cmd)) return run_eval_clf(clf);
  } catch (const hrpb::Error& e) {
    std::cerr << "hrpb: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hrpb: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
