#include "bngraph/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <optional>

#include "bngraph/enumerate.hpp"
#include "bngraph/io.hpp"

namespace bng {

namespace {

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

void append_cubic(Corpus& out, int g) {
  const auto graphs = enumerate_cubic(g);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.push_back({"cubic-g" + std::to_string(g) + "-" + std::to_string(i),
                   "enumerate_cubic(" + std::to_string(g) + ")#" + std::to_string(i), graphs[i]});
  }
}

void append_min3(Corpus& out, int g) {
  const auto graphs = enumerate_min_valency3(g);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.push_back({"min3-g" + std::to_string(g) + "-" + std::to_string(i),
                   "enumerate_min_valency3(" + std::to_string(g) + ")#" + std::to_string(i), graphs[i]});
  }
}

}  // namespace

Multigraph named_family(std::string_view name) {
  if (name == "theta") return families::theta();
  if (name == "dumbbell") return families::dumbbell();
  if (name == "loop1") return families::loop_example();
  if (name == "k4") return families::complete(4);
  if (name.size() > 1 && name.front() == 'c') {
    if (auto n = parse_int(name.substr(1)); n && *n >= 1) return families::cycle(*n);
  }
  if (name.size() > 1 && name.front() == 'k') {
    if (auto n = parse_int(name.substr(1)); n && *n >= 1) return families::complete(*n);
  }
  throw ValidationError("unknown graph family '" + std::string(name) + "'");
}

Corpus bundled_corpus() {
  Corpus corpus;
  for (const char* name : {"theta", "dumbbell", "loop1", "c3", "c4", "c5", "c6", "k4"}) {
    corpus.push_back({name, std::string("family:") + name, named_family(name)});
  }
  const auto named_count = corpus.size();
  for (int g : {2, 3}) {
    Corpus cubic;
    append_cubic(cubic, g);
    for (auto& entry : cubic) {
      const bool duplicate = std::any_of(corpus.begin(), corpus.begin() + static_cast<std::ptrdiff_t>(named_count),
                                         [&](const NamedGraph& known) { return isomorphic(known.graph, entry.graph); });
      if (!duplicate) corpus.push_back(std::move(entry));
    }
  }
  for (int g : {2, 3}) {
    corpus.push_back({"chain-of-loops-" + std::to_string(g), "chain_of_loops(" + std::to_string(g) + ")",
                      families::chain_of_loops(g)});
  }
  return corpus;
}

Corpus loopless(const Corpus& corpus) {
  Corpus out;
  std::copy_if(corpus.begin(), corpus.end(), std::back_inserter(out),
               [](const NamedGraph& entry) { return !entry.graph.has_loops(); });
  return out;
}

Corpus load_corpus(std::string_view spec, std::vector<Skipped>* skipped) {
  Corpus corpus;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;

    const auto colon = item.find(':');
    const std::string_view head = item.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : item.substr(colon + 1);
    if (item == "bundled") {
      for (auto& entry : bundled_corpus()) corpus.push_back(std::move(entry));
    } else if (head == "cubic" || head == "min3" || head == "chain") {
      const auto g = parse_int(arg);
      if (!g) throw ValidationError("corpus item '" + std::string(item) + "' needs an integer genus");
      if (head == "cubic" || head == "min3") {
        try {
          if (head == "cubic") {
            append_cubic(corpus, *g);
          } else {
            append_min3(corpus, *g);
          }
        } catch (const CapExceeded& e) {
          if (!skipped) throw;
          skipped->push_back({std::string(item), e.what()});
        }
      } else {
        corpus.push_back({"chain-of-loops-" + std::to_string(*g), "chain_of_loops(" + std::to_string(*g) + ")",
                          families::chain_of_loops(*g)});
      }
    } else if (head == "family") {
      corpus.push_back({std::string(arg), "family:" + std::string(arg), named_family(arg)});
    } else {
      const std::filesystem::path path{std::string(item)};
      if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& f : std::filesystem::directory_iterator(path))
          if (f.path().extension() == ".graph") files.push_back(f.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) corpus.push_back({f.stem().string(), "file:" + f.string(), read_graph_file(f)});
      } else if (std::filesystem::exists(path)) {
        corpus.push_back({path.stem().string(), "file:" + path.string(), read_graph_file(path)});
      } else {
        throw ValidationError("unknown corpus item '" + std::string(item) + "'");
      }
    }
    if (end == spec.size()) break;
  }
  if (corpus.empty() && (!skipped || skipped->empty())) throw ValidationError("corpus is empty");
  return corpus;
}

}  // namespace bng
