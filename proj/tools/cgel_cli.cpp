// Command-line front end: validate, fmt, render, stats and sent-check over
// .cgel files and directories.

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgel/cgel.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitFailure = 2;

bool use_color() {
  static const bool enabled = [] {
    const char* no_color = std::getenv("NO_COLOR");
    if (no_color != nullptr && no_color[0] != '\0') return false;
    return isatty(fileno(stdout)) != 0;
  }();
  return enabled;
}

std::string colorize(const std::string& line, cgel::Severity severity) {
  if (!use_color()) return line;
  const char* code = "";
  switch (severity) {
    case cgel::Severity::error: code = "\033[31m"; break;
    case cgel::Severity::warning: code = "\033[33m"; break;
    case cgel::Severity::info: code = "\033[36m"; break;
  }
  return std::string(code) + line + "\033[0m";
}

// Expands files and directories into an ordered list of .cgel files.
// Directories are walked recursively in lexicographic order.
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs,
                                    std::string& error) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    fs::path p(input);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cgel") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p, ec)) {
      files.push_back(p);
    } else {
      error = "cannot read '" + input + "': no such file or directory";
      return {};
    }
  }
  return files;
}

bool read_file(const fs::path& path, std::string& out, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open '" + path.string() + "'";
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const fs::path& path, const std::string& content,
                std::string& error) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    error = "cannot write '" + path.string() + "'";
    return false;
  }
  out << content;
  return true;
}

struct FileEntry {
  fs::path path;
  std::vector<cgel::SourceTree> trees;
};

// Parses every input file up front. Parse failures are reported and counted;
// surviving files are handed to the subcommand.
int load_files(const std::vector<std::string>& inputs,
               std::vector<FileEntry>& entries) {
  std::string error;
  std::vector<fs::path> files = expand_inputs(inputs, error);
  if (!error.empty()) {
    std::cerr << "error: " << error << "\n";
    return kExitFailure;
  }
  int status = kExitOk;
  for (const fs::path& path : files) {
    std::string text;
    if (!read_file(path, text, error)) {
      std::cerr << "error: " << error << "\n";
      status = kExitFailure;
      continue;
    }
    try {
      entries.push_back({path, cgel::parse_corpus(text)});
    } catch (const cgel::ParseError& e) {
      std::cerr << path.string() << ":" << e.pos().line << ":"
                << e.pos().column << ": error: " << e.message() << "\n";
      status = kExitFailure;
    }
  }
  return status;
}

int print_diagnostics(const FileEntry& entry,
                      const std::vector<std::vector<cgel::Diagnostic>>& per_tree,
                      bool warnings_as_errors) {
  bool errors = false, warnings = false;
  for (const auto& diags : per_tree) {
    for (const cgel::Diagnostic& d : diags) {
      errors = errors || d.severity == cgel::Severity::error;
      warnings = warnings || d.severity == cgel::Severity::warning;
      std::cout << colorize(cgel::format_diagnostic(entry.path.string(), d),
                            d.severity)
                << "\n";
    }
  }
  if (errors || (warnings && warnings_as_errors)) return kExitDiagnostics;
  return kExitOk;
}

int run_validate(const std::vector<std::string>& inputs, bool strict_lexicon,
                 bool warnings_as_errors) {
  std::vector<FileEntry> entries;
  int status = load_files(inputs, entries);
  for (const FileEntry& entry : entries) {
    std::vector<std::vector<cgel::Diagnostic>> per_tree;
    for (const cgel::SourceTree& tree : entry.trees) {
      cgel::ConstituentGraph g = cgel::build_graph(tree);
      per_tree.push_back(cgel::validate(g, {strict_lexicon}));
    }
    status = std::max(status, print_diagnostics(entry, per_tree,
                                                warnings_as_errors));
  }
  return status;
}

int run_sent_check(const std::vector<std::string>& inputs,
                   bool warnings_as_errors) {
  std::vector<FileEntry> entries;
  int status = load_files(inputs, entries);
  for (const FileEntry& entry : entries) {
    std::vector<std::vector<cgel::Diagnostic>> per_tree;
    for (const cgel::SourceTree& tree : entry.trees) {
      cgel::ConstituentGraph g = cgel::build_graph(tree);
      per_tree.push_back(cgel::check_headers(tree, g));
    }
    status = std::max(status, print_diagnostics(entry, per_tree,
                                                warnings_as_errors));
  }
  return status;
}

int run_fmt(const std::vector<std::string>& inputs, bool check,
            const std::string& output) {
  std::vector<FileEntry> entries;
  int status = load_files(inputs, entries);
  std::string combined;
  for (const FileEntry& entry : entries) {
    std::string canonical =
        cgel::serialize_corpus(entry.trees, cgel::SerializeStyle::canonical);
    if (check) {
      std::string original;
      std::string error;
      read_file(entry.path, original, error);
      if (original != canonical) {
        std::cout << "would reformat: " << entry.path.string() << "\n";
        status = std::max(status, kExitDiagnostics);
      }
      continue;
    }
    if (!combined.empty()) combined += "\n";
    combined += canonical;
  }
  if (check) return status;
  if (!output.empty()) {
    std::string error;
    if (!write_file(output, combined, error)) {
      std::cerr << "error: " << error << "\n";
      return kExitFailure;
    }
  } else {
    std::cout << combined;
  }
  return status;
}

std::string sanitize_name(std::string_view s) {
  std::string out;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    out.push_back(ok ? c : '-');
  }
  return out;
}

int run_render(const std::vector<std::string>& inputs, int collapse_depth,
               bool preamble, const std::string& output) {
  std::vector<FileEntry> entries;
  int status = load_files(inputs, entries);
  cgel::RenderOptions options;
  options.preamble = preamble;
  if (collapse_depth >= 0) options.collapse_depth = collapse_depth;

  if (!output.empty()) fs::create_directories(output);
  for (const FileEntry& entry : entries) {
    for (size_t i = 0; i < entry.trees.size(); ++i) {
      const cgel::SourceTree& tree = entry.trees[i];
      cgel::ConstituentGraph g = cgel::build_graph(tree);
      std::string tex;
      try {
        tex = cgel::render_forest(g, options);
      } catch (const std::invalid_argument& e) {
        std::cerr << entry.path.string() << ": error: " << e.what() << "\n";
        status = std::max(status, kExitDiagnostics);
        continue;
      }
      if (output.empty()) {
        std::cout << tex;
        continue;
      }
      std::string name;
      if (auto id = tree.header("sent_id")) name = sanitize_name(*id);
      if (name.empty()) {
        name = sanitize_name(entry.path.stem().string()) + "-" +
               std::to_string(i + 1);
      }
      fs::path target = fs::path(output) / (name + ".tex");
      std::string error;
      if (!write_file(target, tex, error)) {
        std::cerr << "error: " << error << "\n";
        status = std::max(status, kExitFailure);
      }
    }
  }
  return status;
}

struct CorpusStats {
  long long trees = 0;
  long long nodes = 0;
  long long terminals = 0;
  long long gaps = 0;
  long long fused = 0;
  long long nonce = 0;
  std::map<std::string, long long> categories;
  std::map<std::string, long long> functions;
};

void accumulate(const cgel::ConstituentGraph& g, CorpusStats& stats) {
  ++stats.trees;
  stats.nodes += g.size();
  stats.terminals += static_cast<long long>(cgel::terminals(g).size());
  for (cgel::NodeId id = 0; id < g.size(); ++id) {
    const cgel::GraphNode& n = g.at(id);
    ++stats.categories[n.category.token];
    if (n.parent) ++stats.functions[n.function.token];
    if (n.category.is_gap()) ++stats.gaps;
    if (n.function.is_fused()) ++stats.fused;
    if (n.category.is_nonce() || n.function.is_nonce()) ++stats.nonce;
  }
}

int run_stats(const std::vector<std::string>& inputs, bool tsv) {
  std::vector<FileEntry> entries;
  int status = load_files(inputs, entries);
  CorpusStats stats;
  for (const FileEntry& entry : entries) {
    for (const cgel::SourceTree& tree : entry.trees) {
      cgel::ConstituentGraph g = cgel::build_graph(tree);
      accumulate(g, stats);
    }
  }
  if (tsv) {
    std::cout << "trees\t" << stats.trees << "\n"
              << "nodes\t" << stats.nodes << "\n"
              << "terminals\t" << stats.terminals << "\n"
              << "gaps\t" << stats.gaps << "\n"
              << "fused_nodes\t" << stats.fused << "\n"
              << "nonce_constituents\t" << stats.nonce << "\n";
    for (const auto& [token, count] : stats.categories) {
      std::cout << "category." << token << "\t" << count << "\n";
    }
    for (const auto& [token, count] : stats.functions) {
      std::cout << "function." << token << "\t" << count << "\n";
    }
    return status;
  }

  auto row = [](const std::string& key, long long value) {
    std::cout << "  " << key;
    for (size_t i = key.size(); i < 24; ++i) std::cout << ' ';
    std::cout << value << "\n";
  };
  std::cout << "corpus\n";
  row("trees", stats.trees);
  row("nodes", stats.nodes);
  row("terminals", stats.terminals);
  row("gaps", stats.gaps);
  row("fused nodes", stats.fused);
  row("nonce constituents", stats.nonce);
  std::cout << "categories\n";
  for (const auto& [token, count] : stats.categories) row(token, count);
  std::cout << "functions\n";
  for (const auto& [token, count] : stats.functions) row(token, count);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cgel-kit: tooling for .cgel constituency treebanks"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  bool strict_lexicon = false;
  bool warnings_as_errors = false;
  bool check = false;
  bool preamble = false;
  bool tsv = false;
  int collapse_depth = -1;
  std::string output;

  CLI::App* validate = app.add_subcommand(
      "validate", "check trees against the annotation scheme's constraints");
  validate->add_option("inputs", inputs, ".cgel files or directories")
      ->required();
  validate->add_flag("--strict-lexicon", strict_lexicon,
                     "lint multiword tokens against the complex-lexeme list");
  validate->add_flag("--werror", warnings_as_errors,
                     "treat warnings as errors for the exit code");

  CLI::App* fmt = app.add_subcommand("fmt", "rewrite trees in canonical form");
  fmt->add_option("inputs", inputs, ".cgel files or directories")->required();
  fmt->add_flag("--check", check, "report files that are not canonical");
  fmt->add_option("-o,--output", output, "write to a file instead of stdout");

  CLI::App* render =
      app.add_subcommand("render", "emit LaTeX forest source per tree");
  render->add_option("inputs", inputs, ".cgel files or directories")
      ->required();
  render->add_option("--collapse-depth", collapse_depth,
                     "roof subtrees below this depth");
  render->add_flag("--preamble", preamble,
                   "wrap each tree in a standalone document");
  render->add_option("-o,--output", output, "directory for .tex files");

  CLI::App* stats =
      app.add_subcommand("stats", "count categories, functions, gaps, fusion");
  stats->add_option("inputs", inputs, ".cgel files or directories")->required();
  stats->add_flag("--tsv", tsv, "machine-readable key<TAB>value lines");

  CLI::App* sent_check = app.add_subcommand(
      "sent-check", "compare sent/text headers against the tree");
  sent_check->add_option("inputs", inputs, ".cgel files or directories")
      ->required();
  sent_check->add_flag("--werror", warnings_as_errors,
                       "treat warnings as errors for the exit code");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    return run_validate(inputs, strict_lexicon, warnings_as_errors);
  }
  if (fmt->parsed()) return run_fmt(inputs, check, output);
  if (render->parsed()) {
    return run_render(inputs, collapse_depth, preamble, output);
  }
  if (stats->parsed()) return run_stats(inputs, tsv);
  if (sent_check->parsed()) return run_sent_check(inputs, warnings_as_errors);
  return kExitOk;
}
