#include "irrdom/scan.hpp"

#include <condition_variable>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "irrdom/errors.hpp"
#include "irrdom/text_io.hpp"

namespace irrdom {

namespace {

std::optional<SearchStatus> status_from_string(std::string_view s) {
  for (auto st : {SearchStatus::found, SearchStatus::absent, SearchStatus::inconclusive})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

bool decided(SearchStatus s) { return s != SearchStatus::inconclusive; }

}  // namespace

nlohmann::json to_json(const ScanRecord& r) {
  return {
      {"family", r.family.to_string()},
      {"k", r.k},
      {"status", to_string(r.status)},
      {"labeling", r.labeling ? nlohmann::json(*r.labeling) : nlohmann::json(nullptr)},
      {"seed", r.seed},
      {"nodes_explored", r.nodes_explored},
      {"elapsed_ms", r.elapsed_ms},
  };
}

ScanRecord scan_record_from_json(const nlohmann::json& j) {
  try {
    ScanRecord r;
    r.family = parse_family_spec(j.at("family").get<std::string>());
    r.k = j.at("k").get<std::size_t>();
    auto status = status_from_string(j.at("status").get<std::string>());
    if (!status) throw ParseError("unknown status '" + j.at("status").get<std::string>() + "'");
    r.status = *status;
    if (!j.at("labeling").is_null()) r.labeling = j.at("labeling").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad scan record: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(std::string("bad scan record: ") + e.what());
  }
}

std::vector<ScanRecord> read_scan_records(const std::filesystem::path& file) {
  std::vector<ScanRecord> out;
  std::ifstream in(file);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      ScanRecord r = scan_record_from_json(nlohmann::json::parse(line));
      if (r.status == SearchStatus::found) {
        if (!r.labeling) throw ParseError("found record without a labeling");
        auto g = std::make_shared<const Graph>(generate(r.family));
        Labeling lab = parse_labeling(*r.labeling, g);
        if (!verify(lab).valid || lab.size() != r.k) throw ParseError("found record does not verify");
      } else if (r.status == SearchStatus::absent && r.labeling) {
        throw ParseError("absent record carries a labeling");
      }
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed record: ") + e.what(), lineno);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

std::vector<ScanRecord> run_scan(std::uint32_t from, std::uint32_t to, const ScanOptions& opts,
                                 const std::filesystem::path& out) {
  if (from % 4 != 0 || to % 4 != 0 || from == 0)
    throw ParameterError("scan bounds must be positive multiples of 4");
  if (from > to) throw ParameterError("scan range is empty");

  std::map<std::uint32_t, ScanRecord> done;
  for (auto& r : read_scan_records(out))
    if (r.family.kind == FamilyKind::cycle && decided(r.status)) done.emplace(r.family.params[0], r);

  std::vector<std::uint32_t> todo;
  for (std::uint32_t len = from; len <= to; len += 4)
    if (!done.contains(len)) todo.push_back(len);

  std::ofstream file(out, std::ios::app);
  if (!file) throw Error("cannot open '" + out.string() + "' for appending");

  std::mutex mu;
  std::condition_variable ready;
  std::deque<ScanRecord> queue;
  std::size_t next = 0, finished_workers = 0;
  std::exception_ptr failure;

  auto work = [&] {
    while (true) {
      std::uint32_t len;
      {
        std::lock_guard lock(mu);
        if (next >= todo.size() || failure) break;
        len = todo[next++];
      }
      try {
        const std::size_t k = len / 2 + 1;
        SearchResult res = find_eids(std::make_shared<const Graph>(cycle(len)), k, opts.search);
        ScanRecord rec{{FamilyKind::cycle, {len}}, k, res.status, std::nullopt, opts.seed, res.nodes_explored,
                       res.elapsed.count()};
        if (res.labeling) rec.labeling = format_labeling(*res.labeling);
        std::lock_guard lock(mu);
        queue.push_back(std::move(rec));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      ready.notify_one();
    }
    std::lock_guard lock(mu);
    ++finished_workers;
    ready.notify_one();
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(todo.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

  std::map<std::uint32_t, ScanRecord> fresh;
  {
    std::unique_lock lock(mu);
    while (true) {
      ready.wait(lock, [&] { return !queue.empty() || finished_workers == workers; });
      while (!queue.empty()) {
        ScanRecord rec = std::move(queue.front());
        queue.pop_front();
        file << to_json(rec).dump() << '\n';
        file.flush();
        if (!file) failure = std::make_exception_ptr(Error("write to '" + out.string() + "' failed"));
        fresh.emplace(rec.family.params[0], std::move(rec));
      }
      if (finished_workers == workers) break;
    }
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::vector<ScanRecord> result;
  for (std::uint32_t len = from; len <= to; len += 4) {
    if (auto it = done.find(len); it != done.end())
      result.push_back(it->second);
    else
      result.push_back(fresh.at(len));
  }
  return result;
}

}  // namespace irrdom
