// Copyright 2026 The gramnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// gramnoise command-line entry point. Subcommands: stats, noise, mix,
// score, report. Exit codes: 0 success, 1 usage error, 2 data error.
// Diagnostics go to stderr; data goes to files or stdout only.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gramnoise/gramnoise.hpp"

namespace gn = gramnoise;
using nlohmann::json;

namespace {

std::vector<std::string> g_argv;

json run_provenance(std::uint64_t* seed = nullptr) {
  json run;
  run["argv"] = g_argv;
  run["version"] = gn::kVersion;
  run["normalization"] = gn::kScoringNormalizationVersion;
  if (seed) run["seed"] = *seed;
  return run;
}

gn::InflectionLexicon load_lexicon(const std::string& path) {
  if (path.empty()) return gn::InflectionLexicon::builtin();
  return gn::InflectionLexicon::from_file(path);
}

gn::ErrorType require_type(const std::string& name) {
  auto t = gn::parse_error_type(name);
  if (!t) throw gn::DataError("unknown error type: " + name);
  return *t;
}

// ---------------------------------------------------------------- stats --

struct StatsArgs {
  std::vector<std::string> m2_paths;
  std::string out;
  double alpha = 0.0;
  std::vector<std::string> map_specs;
  bool no_default_map = false;
  std::string lexicon;
};

int run_stats(const StatsArgs& args) {
  gn::CodeMap code_map =
      args.no_default_map ? gn::CodeMap{} : gn::default_code_map();
  for (const auto& spec : args.map_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw gn::DataError("--map expects CODE=TYPE, got: " + spec);
    code_map[spec.substr(0, eq)] = require_type(spec.substr(eq + 1));
  }

  auto lex = load_lexicon(args.lexicon);
  std::vector<gn::M2Entry> entries;
  json files = json::array();
  for (const auto& path : args.m2_paths) {
    auto batch = gn::parse_m2_file(path);
    files.push_back({{"path", path},
                     {"digest", gn::digest_file(path)},
                     {"entries", batch.size()}});
    entries.insert(entries.end(), batch.begin(), batch.end());
  }

  auto stats = gn::collect_stats(entries, code_map, lex);
  auto matrices = gn::build_confusion_matrices(stats, args.alpha);
  matrices.source = {{"files", files}, {"run", run_provenance()}};
  gn::write_file_atomic(args.out, gn::render_matrices(matrices));

  std::cerr << "stats: " << entries.size() << " entries, "
            << stats.total_mapped << " mapped annotations\n";
  for (const auto& [type, table] : stats.tables)
    if (table.other > 0)
      std::cerr << "stats: " << gn::to_string(type) << " other bucket: "
                << table.other << "\n";
  for (const auto& [code, n] : stats.unmapped_codes)
    std::cerr << "stats: unmapped code " << code << " x" << n << "\n";
  std::cerr << "stats: wrote " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------- noise --

struct NoiseArgs {
  std::string type;
  std::string corpus;
  std::string trees;
  std::string matrices;
  std::string out;
  std::string events;
  std::string lexicon;
  std::uint64_t seed = gn::kDefaultSeed;
  unsigned workers = 1;
};

int run_noise(NoiseArgs args) {
  gn::ErrorType type = require_type(args.type);
  if (args.events.empty()) args.events = args.out + ".events.tsv";

  auto raw = gn::read_lines(args.corpus);
  std::vector<std::string> trees;
  gn::ConfusionMatrixSet matrices;
  gn::NoiseConfig config{type, nullptr, args.seed};
  if (type != gn::ErrorType::kDrop) {
    if (args.trees.empty())
      throw gn::DataError("--trees is required for type " + args.type);
    if (args.matrices.empty())
      throw gn::DataError("--matrices is required for type " + args.type);
    trees = gn::read_lines(args.trees);
    matrices = gn::load_matrices(args.matrices);
    config.matrices = &matrices;
  }
  auto lex = load_lexicon(args.lexicon);

  auto result = gn::noisify_corpus(raw, trees, config, lex, args.workers);

  std::vector<std::string> header;
  header.push_back("gramnoise noise v" + std::string(gn::kVersion));
  {
    std::string argv_line = "argv:";
    for (const auto& a : g_argv) argv_line += " " + a;
    header.push_back(argv_line);
  }
  header.push_back("seed: " + std::to_string(args.seed));
  header.push_back("corpus: " + args.corpus + " fnv1a64=" +
                   gn::digest_lines(raw));
  if (!args.trees.empty())
    header.push_back("trees: " + args.trees + " fnv1a64=" +
                     gn::digest_lines(trees));
  if (!args.matrices.empty())
    header.push_back("matrices: " + args.matrices + " fnv1a64=" +
                     gn::fnv1a64_hex(gn::read_file(args.matrices)));
  header.push_back("summary: " + gn::format_change_summary(
                                     type, raw.size(), result.changed()));

  gn::write_lines_atomic(args.out, result.lines);
  gn::write_file_atomic(args.events,
                        gn::render_event_log(result.events, header));

  std::cerr << "noise: " << gn::format_change_summary(type, raw.size(),
                                                      result.changed())
            << " (" << result.changed() << "/" << raw.size()
            << " lines changed)\n";
  std::cerr << "noise: wrote " << args.out << " and " << args.events << "\n";
  return 0;
}

// ------------------------------------------------------------------ mix --

struct MixArgs {
  std::string mode;
  std::string clean_src, clean_tgt;
  std::vector<std::string> noisy_specs;  // type=path
  std::string out_src, out_tgt, out_tags, manifest;
  std::size_t max_words = 0;
};

int run_mix(MixArgs args) {
  if (args.manifest.empty()) args.manifest = args.out_src + ".manifest.json";
  auto clean = gn::ParallelCorpus::load(args.clean_src, args.clean_tgt);

  std::map<gn::ErrorType, gn::ParallelCorpus> noisy;
  json noisy_paths;
  for (const auto& spec : args.noisy_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw gn::DataError("--noisy expects TYPE=SOURCE_PATH, got: " + spec);
    gn::ErrorType t = require_type(spec.substr(0, eq));
    std::string path = spec.substr(eq + 1);
    gn::ParallelCorpus c;
    c.source = gn::read_lines(path);
    c.target = clean.target;  // noised copies share the clean target side
    if (c.source.size() != clean.size())
      throw gn::DataError(spec.substr(0, eq) + " corpus has " +
                          std::to_string(c.source.size()) +
                          " lines, expected " + std::to_string(clean.size()));
    noisy_paths[gn::to_string(t)] = path;
    noisy.emplace(t, std::move(c));
  }

  gn::BuiltDataset built;
  if (args.mode == "error") {
    if (noisy.size() != 1)
      throw gn::DataError("mode error needs exactly one --noisy input");
    const auto& [t, c] = *noisy.begin();
    built.corpus = c;
    built.corpus.tags.assign(c.size(), gn::to_string(t));
    std::size_t changed = 0;
    for (std::size_t i = 0; i < clean.size(); ++i)
      if (clean.source[i] != c.source[i]) ++changed;
    built.manifest["format_version"] = 1;
    built.manifest["mode"] = "error";
    built.manifest["error_type"] = gn::to_string(t);
    built.manifest["total_lines"] = c.size();
    built.manifest["composition"] = {{gn::to_string(t), c.size()}};
    built.manifest["changed_lines"] = changed;
    built.manifest["changed_fraction"] =
        clean.size() == 0 ? 0.0
                          : static_cast<double>(changed) /
                                static_cast<double>(clean.size());
    built.manifest["tool"] = {{"name", "gramnoise"}, {"version", gn::kVersion}};
  } else if (args.mode == "clean+error") {
    if (noisy.size() != 1)
      throw gn::DataError("mode clean+error needs exactly one --noisy input");
    const auto& [t, c] = *noisy.begin();
    built = gn::build_clean_plus_error(clean, c, t);
  } else if (args.mode == "mix-all") {
    built = gn::build_mix_all(clean, noisy);
  } else {
    throw gn::DataError("unknown mode: " + args.mode +
                        " (expected error, clean+error, or mix-all)");
  }

  if (args.max_words > 0) {
    auto filtered = gn::filter_by_length(built.corpus, args.max_words);
    built.corpus = std::move(filtered.corpus);
    built.manifest["filter"] = {
        {"max_words", args.max_words},
        {"removed_lines", filtered.manifest["removed_lines"]}};
    built.manifest["total_lines"] = built.corpus.size();
  }

  built.manifest["input_paths"] = {{"clean_source", args.clean_src},
                                   {"clean_target", args.clean_tgt},
                                   {"noisy", noisy_paths}};
  built.manifest["run"] = run_provenance();

  gn::write_lines_atomic(args.out_src, built.corpus.source);
  gn::write_lines_atomic(args.out_tgt, built.corpus.target);
  if (!args.out_tags.empty())
    gn::write_lines_atomic(args.out_tags, built.corpus.tags);
  gn::write_file_atomic(args.manifest, built.manifest.dump(2) + "\n");

  std::cerr << "mix: " << built.corpus.size() << " lines -> " << args.out_src
            << ", manifest " << args.manifest << "\n";
  return 0;
}

// ---------------------------------------------------------------- score --

struct ScoreArgs {
  std::string hyp;
  std::vector<std::string> refs;
  std::string out;
  std::string sentence_scores;
  unsigned workers = 1;
};

int run_score(const ScoreArgs& args) {
  auto hyps = gn::read_lines(args.hyp);
  std::vector<std::vector<std::string>> refsets(hyps.size());
  json ref_meta = json::array();
  for (const auto& path : args.refs) {
    auto lines = gn::read_lines(path);
    if (lines.size() != hyps.size())
      throw gn::DataError("reference " + path + " has " +
                          std::to_string(lines.size()) + " lines, expected " +
                          std::to_string(hyps.size()));
    ref_meta.push_back({{"path", path}, {"digest", gn::digest_lines(lines)}});
    for (std::size_t i = 0; i < lines.size(); ++i)
      refsets[i].push_back(std::move(lines[i]));
  }

  auto score = gn::corpus_bleu(hyps, refsets, args.workers);
  std::cout << gn::format_bleu(score) << "\n";

  if (!args.sentence_scores.empty()) {
    std::string tsv = "# sentence_bleu (add-one smoothing on n>1), norm " +
                      std::string(gn::kScoringNormalizationVersion) + "\n";
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f",
                    gn::sentence_bleu(hyps[i], refsets[i]).score);
      tsv += std::to_string(i) + "\t" + buf + "\n";
    }
    gn::write_file_atomic(args.sentence_scores, tsv);
  }

  if (!args.out.empty()) {
    json report = gn::to_json(score);
    report["hypotheses"] = {{"path", args.hyp},
                            {"digest", gn::digest_lines(hyps)}};
    report["references"] = ref_meta;
    report["run"] = run_provenance();
    gn::write_file_atomic(args.out, report.dump(2) + "\n");
    std::cerr << "score: wrote " << args.out << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- report --

struct ReportArgs {
  std::string events;
  std::string noisy;
  std::string clean;
  std::vector<std::string> refs;
  std::string out;
};

int run_report(const ReportArgs& args) {
  auto events = gn::parse_event_log(gn::read_file(args.events));
  auto noisy = gn::read_lines(args.noisy);
  auto clean = gn::read_lines(args.clean);
  std::vector<std::vector<std::string>> refsets(noisy.size());
  for (const auto& path : args.refs) {
    auto lines = gn::read_lines(path);
    if (lines.size() != noisy.size())
      throw gn::DataError("reference " + path + " has " +
                          std::to_string(lines.size()) + " lines, expected " +
                          std::to_string(noisy.size()));
    for (std::size_t i = 0; i < lines.size(); ++i)
      refsets[i].push_back(std::move(lines[i]));
  }

  auto report = gn::delta_report(events, noisy, clean, refsets);
  std::cout << "delta report: BLEU(noisy subset) - BLEU(clean subset), norm "
            << gn::kScoringNormalizationVersion << "\n";
  std::cout << gn::format_delta_report(report);

  if (!args.out.empty()) {
    json j = gn::to_json(report);
    j["inputs"] = {{"events", args.events},
                   {"noisy", args.noisy},
                   {"clean", args.clean},
                   {"events_digest", gn::fnv1a64_hex(gn::read_file(args.events))},
                   {"noisy_digest", gn::digest_lines(noisy)},
                   {"clean_digest", gn::digest_lines(clean)}};
    j["run"] = run_provenance();
    gn::write_file_atomic(args.out, j.dump(2) + "\n");
    std::cerr << "report: wrote " << args.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_argv.assign(argv, argv + argc);

  CLI::App app{"gramnoise: learn grammatical-error statistics, inject "
               "one-error-per-sentence noise, build dataset mixtures, and "
               "score translations"};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string("gramnoise ") + gn::kVersion +
                           " (scoring normalization " +
                           gn::kScoringNormalizationVersion + ")");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand(
      "stats", "distill M2 annotations into confusion matrices");
  stats->add_option("--m2", stats_args.m2_paths, "M2 annotation file")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--out", stats_args.out, "output matrices JSON")
      ->required();
  stats->add_option("--alpha", stats_args.alpha,
                    "additive smoothing constant (default 0)");
  stats->add_option("--map", stats_args.map_specs,
                    "extra error-code mapping CODE=TYPE");
  stats->add_flag("--no-default-map", stats_args.no_default_map,
                  "start from an empty code map instead of the NUCLE one");
  stats->add_option("--lexicon", stats_args.lexicon,
                    "inflection lexicon TSV (default: built-in)")
      ->envname("GRAMNOISE_LEXICON");

  NoiseArgs noise_args;
  auto* noise = app.add_subcommand(
      "noise", "inject exactly one error per sentence, wherever possible");
  noise->add_option("--type", noise_args.type, "drop|art|prep|nn|sva")
      ->required();
  noise->add_option("--corpus", noise_args.corpus, "raw corpus, one sentence "
                    "per line")
      ->required()
      ->check(CLI::ExistingFile);
  noise->add_option("--trees", noise_args.trees,
                    "bracketed trees aligned 1:1 with the corpus");
  noise->add_option("--matrices", noise_args.matrices,
                    "confusion matrices JSON from `stats`")
      ->envname("GRAMNOISE_MATRICES");
  noise->add_option("--seed", noise_args.seed,
                    "RNG seed (default " + std::to_string(gn::kDefaultSeed) +
                        ")");
  noise->add_option("--out", noise_args.out, "noisy corpus output")
      ->required();
  noise->add_option("--events", noise_args.events,
                    "event log output (default <out>.events.tsv)");
  noise->add_option("--workers", noise_args.workers,
                    "worker threads; output is identical for any count");
  noise->add_option("--lexicon", noise_args.lexicon,
                    "inflection lexicon TSV (default: built-in)")
      ->envname("GRAMNOISE_LEXICON");

  MixArgs mix_args;
  auto* mix = app.add_subcommand("mix", "build dataset mixtures");
  mix->add_option("--mode", mix_args.mode, "error|clean+error|mix-all")
      ->required();
  mix->add_option("--clean-src", mix_args.clean_src, "clean source file")
      ->required()
      ->check(CLI::ExistingFile);
  mix->add_option("--clean-tgt", mix_args.clean_tgt, "clean target file")
      ->required()
      ->check(CLI::ExistingFile);
  mix->add_option("--noisy", mix_args.noisy_specs,
                  "noised source file as TYPE=PATH (repeatable)");
  mix->add_option("--out-src", mix_args.out_src, "output source file")
      ->required();
  mix->add_option("--out-tgt", mix_args.out_tgt, "output target file")
      ->required();
  mix->add_option("--out-tags", mix_args.out_tags,
                  "optional per-line origin tag file");
  mix->add_option("--manifest", mix_args.manifest,
                  "manifest path (default <out-src>.manifest.json)");
  mix->add_option("--max-words", mix_args.max_words,
                  "drop pairs where either side exceeds this many words");

  ScoreArgs score_args;
  auto* score = app.add_subcommand(
      "score", "corpus BLEU of a hypothesis file against reference files");
  score->add_option("--hyp", score_args.hyp, "hypothesis file")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--ref", score_args.refs,
                    "reference file, aligned by line (repeatable for "
                    "multi-reference scoring)")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--out", score_args.out, "machine-readable report JSON");
  score->add_option("--sentence-scores", score_args.sentence_scores,
                    "per-line smoothed sentence BLEU TSV");
  score->add_option("--workers", score_args.workers, "worker threads");

  ReportArgs report_args;
  auto* report = app.add_subcommand(
      "report", "per-substitution BLEU delta matrix from an event log");
  report->add_option("--events", report_args.events, "event log from `noise`")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--noisy", report_args.noisy,
                     "translations of the noisy source")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--clean", report_args.clean,
                     "translations of the clean source")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--ref", report_args.refs,
                     "reference file (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--out", report_args.out, "machine-readable report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 1;
  }

  try {
    if (*stats) return run_stats(stats_args);
    if (*noise) return run_noise(noise_args);
    if (*mix) return run_mix(mix_args);
    if (*score) return run_score(score_args);
    if (*report) return run_report(report_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
