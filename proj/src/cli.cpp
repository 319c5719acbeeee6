#include "astvec/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astvec/analysis.hpp"
#include "astvec/ast.hpp"
#include "astvec/classify.hpp"
#include "astvec/embedding_io.hpp"
#include "astvec/error.hpp"
#include "astvec/parser.hpp"
#include "astvec/trainer.hpp"

namespace astvec {
namespace {

namespace fs = std::filesystem;

// Thrown for flag combinations CLI11 cannot express; maps to exit code 1.
struct UsageError : Error {
  using Error::Error;
};

struct HyperFlags {
  Hyperparams hyper;
  bool no_shuffle = false;

  void add(CLI::App& cmd) {
    cmd.add_option("--dim", hyper.dim, "Embedding dimension N_f")->capture_default_str();
    cmd.add_option("--margin", hyper.margin, "Hinge margin")->capture_default_str();
    cmd.add_option("--lambda", hyper.lambda, "Penalty weight on W_l, W_r")->capture_default_str();
    cmd.add_option("--lr", hyper.learning_rate, "Learning rate")->capture_default_str();
    cmd.add_option("--momentum", hyper.momentum, "Momentum")->capture_default_str();
    cmd.add_option("--epochs", hyper.epochs, "Maximum number of epochs")->capture_default_str();
    cmd.add_option("--seed", hyper.seed, "Master seed")->capture_default_str();
    cmd.add_flag("--no-shuffle", no_shuffle, "Visit samples in corpus order every epoch");
  }
  Hyperparams get() const {
    Hyperparams h = hyper;
    h.shuffle = !no_shuffle;
    try {
      h.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return h;
  }
};

std::string seed_line(std::uint64_t seed) { return "# seed=" + std::to_string(seed) + "\n"; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// `dir`/`name`, creating `dir` first.
fs::path in_dir(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  return dir / name;
}

// --- parse -----------------------------------------------------------------

struct ParseCmd {
  std::vector<std::string> files;
  std::string out_dir;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("parse", "Parse C files and print their ASTs");
    cmd->add_option("files", files, "C source files")->required();
    cmd->add_option("--out-dir", out_dir, "Write <stem>.ast.json per file instead of stdout");
  }

  int run(std::ostream& out, std::ostream& err) const {
    for (const auto& f : files) {
      AstNode ast;
      try {
        ast = cparse::parse_file(f);
      } catch (const SourceError& e) {
        err << f << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return kExitInput;
      }
      if (out_dir.empty()) {
        out << dump_ast(ast) << "\n";
      } else {
        write_text_file(in_dir(out_dir, fs::path(f).stem().string() + ".ast.json"),
                        dump_ast(ast) + "\n");
      }
    }
    return kExitOk;
  }
};

// --- corpus-build ----------------------------------------------------------

struct CorpusCmd {
  std::string root;
  std::string out;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "corpus-build", "Parse <root>/<label>/*.c into a labelled corpus file (JSON lines)");
    cmd->add_option("--root", root, "Directory with one subdirectory per label")->required();
    cmd->add_option("--out", out, "Corpus file to write")->required();
  }

  int run(std::ostream& log, std::ostream& err) const {
    if (!fs::is_directory(root)) throw IoError("not a directory: " + root);
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file() && e.path().extension() == ".c") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<LabeledProgram> corpus;
    std::size_t skipped = 0;
    for (const auto& f : files) {
      const fs::path rel = fs::relative(f, root);
      if (rel.parent_path().empty()) {
        err << "warning: " << f.string() << ": not inside a label directory, skipped\n";
        ++skipped;
        continue;
      }
      try {
        corpus.push_back({cparse::parse_file(f), rel.begin()->string(), rel.generic_string()});
      } catch (const SourceError& e) {
        err << "warning: " << f.string() << ":" << e.line() << ":" << e.column() << ": "
            << e.message() << "; file excluded\n";
        ++skipped;
      }
    }
    write_corpus(out, corpus);
    log << corpus.size() << " programs, " << label_set(corpus).size() << " labels, " << skipped
        << " skipped\n";
    return kExitOk;
  }
};

// --- train -----------------------------------------------------------------

struct TrainCmd {
  HyperFlags flags;
  std::string corpus;
  std::string out;
  std::string loss_csv_path;
  std::string resume;
  CLI::App* cmd = nullptr;

  void add(CLI::App& app) {
    cmd = app.add_subcommand("train", "Learn node-kind embeddings from a corpus");
    cmd->add_option("--corpus", corpus, "Corpus file from corpus-build")->required();
    cmd->add_option("--out", out, "Checkpoint to write")->required();
    cmd->add_option("--loss-csv", loss_csv_path, "Per-epoch loss log");
    cmd->add_option("--resume", resume, "Continue from this checkpoint");
    flags.add(*cmd);
  }

  int run(std::ostream& log) const {
    Checkpoint state;
    if (!resume.empty()) {
      for (const char* name : {"--dim", "--margin", "--lambda", "--lr", "--momentum", "--seed",
                               "--no-shuffle"}) {
        if (cmd->count(name) > 0)
          throw UsageError(std::string(name) + " cannot be changed when resuming");
      }
      state = load_checkpoint(resume);
      if (cmd->count("--epochs") > 0) state.hyper.epochs = flags.hyper.epochs;
    } else {
      state = start_training(flags.get());
    }
    const auto programs = read_corpus(corpus);
    const auto samples = build_training_set(programs);
    if (samples.empty()) throw FormatError(corpus + ": corpus yields no training samples");
    const std::size_t ran = continue_training(state, samples, state.hyper.epochs);
    save_checkpoint(state, out);
    if (!loss_csv_path.empty()) write_text_file(loss_csv_path, loss_csv(state));
    log << samples.size() << " samples, " << ran << " epochs run, " << state.epoch
        << " total";
    if (!state.mean_hinge.empty()) log << ", mean hinge " << state.mean_hinge.back();
    if (has_converged(state.mean_hinge)) log << " (converged)";
    log << "\n";
    return kExitOk;
  }
};

// --- nn / cluster ----------------------------------------------------------

struct NnCmd {
  std::string checkpoint;
  std::string symbol;
  std::size_t top = 5;
  bool cosine = false;
  std::string out;
  std::string report_dir;
  std::optional<std::uint64_t> seed;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("nn", "Nearest neighbors of a node kind");
    cmd->add_option("--checkpoint", checkpoint, "Trained checkpoint")->required();
    cmd->add_option("--symbol", symbol, "Query node kind, e.g. ID");
    cmd->add_option("--top", top, "Number of neighbors")->capture_default_str();
    cmd->add_flag("--cosine", cosine, "Rank by cosine distance instead of Euclidean");
    cmd->add_option("--out", out, "Write the table here instead of stdout");
    cmd->add_option("--report-dir", report_dir, "Write the full neighbor and cluster report");
    cmd->add_option("--seed", seed, "Seed for the clustering in the report (default: training seed)");
  }

  int run(std::ostream& stdout_) const {
    if (symbol.empty() && report_dir.empty()) throw UsageError("nn needs --symbol or --report-dir");
    std::optional<NodeKind> kind;
    if (!symbol.empty()) {
      kind = kind_from_name(symbol);
      if (!kind) throw UsageError("unknown symbol '" + symbol + "'");
      if (top < 1 || top >= kVocabularySize)
        throw UsageError("--top must be in [1, " + std::to_string(kVocabularySize - 1) + "]");
    }
    const Checkpoint cp = load_checkpoint(checkpoint);
    const std::uint64_t s = seed.value_or(cp.hyper.seed);
    if (kind) {
      const auto list = nearest_neighbors(cp.params, *kind, top,
                                          cosine ? Metric::cosine : Metric::euclidean);
      std::string text = seed_line(s) + "rank,neighbor,distance\n";
      char buf[40];
      for (std::size_t r = 0; r < list.ranked.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.17g", list.ranked[r].second);
        text += std::to_string(r + 1) + "," + std::string(kind_name(list.ranked[r].first)) + "," +
                buf + "\n";
      }
      emit(text, out, stdout_);
    }
    if (!report_dir.empty()) emit_report(cp.params, report_dir, ReportOptions{s, 3, 16, 5});
    return kExitOk;
  }
};

struct ClusterCmd {
  std::string checkpoint;
  std::size_t k = 3;
  std::size_t restarts = 16;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string report_dir;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("cluster", "k-means clustering of the embeddings");
    cmd->add_option("--checkpoint", checkpoint, "Trained checkpoint")->required();
    cmd->add_option("--k", k, "Number of clusters")->capture_default_str();
    cmd->add_option("--restarts", restarts, "k-means restarts")->capture_default_str();
    cmd->add_option("--seed", seed, "Seed (default: training seed)");
    cmd->add_option("--out", out, "Write symbol,cluster CSV here instead of stdout");
    cmd->add_option("--report-dir", report_dir, "Also write the full report");
  }

  int run(std::ostream& stdout_) const {
    if (k < 1 || k > kVocabularySize)
      throw UsageError("--k must be in [1, " + std::to_string(kVocabularySize) + "]");
    if (restarts < 1) throw UsageError("--restarts must be at least 1");
    const Checkpoint cp = load_checkpoint(checkpoint);
    const std::uint64_t s = seed.value_or(cp.hyper.seed);
    const Clustering c = kmeans(cp.params, k, restarts, s);
    emit(clusters_csv(c, s), out, stdout_);
    if (!report_dir.empty()) emit_report(cp.params, report_dir, ReportOptions{s, k, restarts, 5});
    return kExitOk;
  }
};

// --- classify --------------------------------------------------------------

struct ClassifyCmd {
  std::string corpus;
  std::string checkpoint;
  std::uint64_t seed = 1;
  std::size_t epochs = 100;
  std::size_t lr_epochs = 100;
  bool no_fine_tune = false;
  std::optional<std::uint64_t> split_seed;
  std::string metrics_dir;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "classify", "Compare logistic regression with random and pretrained embedding networks");
    cmd->add_option("--corpus", corpus, "Corpus file from corpus-build")->required();
    cmd->add_option("--checkpoint", checkpoint, "Checkpoint with pretrained embeddings")->required();
    cmd->add_option("--seed", seed, "Seed for split, initialization and batch order")
        ->capture_default_str();
    cmd->add_option("--epochs", epochs, "Epochs for the embedding networks")->capture_default_str();
    cmd->add_option("--lr-epochs", lr_epochs, "Epochs for logistic regression")->capture_default_str();
    cmd->add_flag("--no-fine-tune", no_fine_tune, "Keep the embedding table fixed");
    cmd->add_option("--split-seed", split_seed, "Seed of the train/cv/test split (default: derived from --seed)");
    cmd->add_option("--metrics-dir", metrics_dir, "Write per-epoch metrics CSVs and the summary");
  }

  int run(std::ostream& stdout_) const {
    const Checkpoint cp = load_checkpoint(checkpoint);
    const auto programs = read_corpus(corpus);
    ComparisonConfig cfg;
    cfg.seed = seed;
    cfg.split_seed = split_seed;
    cfg.mlp.epochs = epochs;
    cfg.mlp.fine_tune = !no_fine_tune;
    cfg.logistic.epochs = lr_epochs;
    ComparisonResult r;
    try {
      r = compare_classifiers(programs, cp.params, cfg);
    } catch (const std::invalid_argument& e) {
      throw FormatError(corpus + ": " + e.what());
    }
    const std::string table = comparison_table(r, seed);
    stdout_ << table;
    if (!metrics_dir.empty()) {
      write_text_file(in_dir(metrics_dir, "logistic.csv"), metrics_csv(r.logistic_curve, seed));
      write_text_file(in_dir(metrics_dir, "mlp_random.csv"), metrics_csv(r.random_curve, seed));
      write_text_file(in_dir(metrics_dir, "mlp_pretrained.csv"),
                      metrics_csv(r.pretrained_curve, seed));
      write_text_file(in_dir(metrics_dir, "summary.txt"), table);
    }
    return kExitOk;
  }
};

// --- export ----------------------------------------------------------------

struct ExportCmd {
  std::string checkpoint;
  std::string out;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("export", "Write embeddings in the \"V N_f\" text format");
    cmd->add_option("--checkpoint", checkpoint, "Trained checkpoint")->required();
    cmd->add_option("--out", out, "Output file (default stdout)");
  }

  int run(std::ostream& stdout_) const {
    const Checkpoint cp = load_checkpoint(checkpoint);
    emit(format_embeddings(cp.params.embeddings), out, stdout_);
    return kExitOk;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Node-kind embeddings for C abstract syntax trees", "astvec"};
  app.require_subcommand(1);
  ParseCmd parse;
  CorpusCmd corpus;
  TrainCmd train_cmd;
  NnCmd nn;
  ClusterCmd cluster;
  ClassifyCmd classify;
  ExportCmd export_cmd;
  parse.add(app);
  corpus.add(app);
  train_cmd.add(app);
  nn.add(app);
  cluster.add(app);
  classify.add(app);
  export_cmd.add(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "parse") return parse.run(out, err);
    if (name == "corpus-build") return corpus.run(out, err);
    if (name == "train") return train_cmd.run(out);
    if (name == "nn") return nn.run(out);
    if (name == "cluster") return cluster.run(out);
    if (name == "classify") return classify.run(out);
    return export_cmd.run(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace astvec
