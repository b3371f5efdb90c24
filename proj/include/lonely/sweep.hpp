#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "decider.hpp"

namespace lonely {

enum class Classification { BelowBound, AtBound, AboveBound, Unresolved };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::BelowBound: return "BelowBound";
        case Classification::AtBound: return "AtBound";
        case Classification::AboveBound: return "AboveBound";
        case Classification::Unresolved: return "Unresolved";
    }
    return "?";
}

// Position of the gap relative to 1/(n+1).
inline Classification classify(const SearchResult& gap, std::size_t n) {
    Rational bound(1, static_cast<long>(n) + 1);
    if (const auto* g = std::get_if<Rational>(&gap)) {
        if (*g < bound) return Classification::BelowBound;
        return *g == bound ? Classification::AtBound : Classification::AboveBound;
    }
    const auto& iv = std::get<Interval>(gap);
    if (iv.hi < bound) return Classification::BelowBound;
    if (bound < iv.lo) return Classification::AboveBound;
    return Classification::Unresolved;
}

inline std::string gap_string(const SearchResult& gap) {
    if (const auto* g = std::get_if<Rational>(&gap)) return g->str();
    const auto& iv = std::get<Interval>(gap);
    return "(" + iv.lo.str() + "," + iv.hi.str() + ")";
}

struct SweepRecord {
    VelocityVector v;
    SearchResult gap;
    Classification classification = Classification::Unresolved;
    std::optional<ShiftVector> witness;
};

// Strictly increasing positive vectors of length n with gcd 1 and sum <= max_sum, in lexicographic order.
inline std::vector<VelocityVector> sorted_primitive_vectors(std::size_t n, long max_sum) {
    std::vector<VelocityVector> out;
    if (n == 0) return out;
    std::vector<long> v(n);
    auto rec = [&](auto&& self, std::size_t i, long prev, long sum) -> void {
        if (i == n) {
            long g = 0;
            for (long x : v) g = std::gcd(g, x);
            if (g == 1) out.emplace_back(v);
            return;
        }
        long rest = static_cast<long>(n - i - 1);
        // the remaining entries exceed x by at least 1, 2, ..., rest
        for (long x = prev + 1; sum + x * (rest + 1) + rest * (rest + 1) / 2 <= max_sum; ++x) {
            v[i] = x;
            self(self, i + 1, x, sum + x);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

inline bool record_before(const SweepRecord& a, const SweepRecord& b) {
    auto key = [](const SweepRecord& r) -> const Rational& {
        if (const auto* g = std::get_if<Rational>(&r.gap)) return *g;
        return std::get<Interval>(r.gap).lo;
    };
    const Rational &ka = key(a), &kb = key(b);
    if (ka != kb) return ka < kb;
    return a.v < b.v;
}

struct SweepOptions {
    unsigned jobs = 1;
    BigInt max_denominator = 0;  // 0: per-vector default
    std::function<void(std::size_t done, std::size_t total)> progress;
};

// Workers pull the next index from a shared counter; results are sorted afterwards so the
// thread count never changes the output.
inline std::vector<SweepRecord> run_sweep(const std::vector<VelocityVector>& vectors, const SweepOptions& opt = {}) {
    std::vector<SweepRecord> records(vectors.size());
    std::atomic<std::size_t> next{0}, done{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= vectors.size()) return;
            try {
                GapReport r = shifted_gap_report(vectors[i], opt.max_denominator);
                records[i] = {vectors[i], r.gap, classify(r.gap, vectors[i].size()), r.witness};
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = vectors.size();
                return;
            }
            std::size_t d = ++done;
            if (opt.progress) {
                std::lock_guard lock(failure_mutex);
                opt.progress(d, vectors.size());
            }
        }
    };
    unsigned jobs = std::max(1u, opt.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    std::sort(records.begin(), records.end(), record_before);
    return records;
}

struct SweepSummary {
    std::size_t total = 0, below = 0, at = 0, above = 0, unresolved = 0;
};

inline SweepSummary summarize(const std::vector<SweepRecord>& records) {
    SweepSummary s;
    for (const auto& r : records) {
        ++s.total;
        switch (r.classification) {
            case Classification::BelowBound: ++s.below; break;
            case Classification::AtBound: ++s.at; break;
            case Classification::AboveBound: ++s.above; break;
            case Classification::Unresolved: ++s.unresolved; break;
        }
    }
    return s;
}

inline std::string gap_decimal(const SearchResult& gap) {
    if (const auto* g = std::get_if<Rational>(&gap)) return g->decimal(15);
    return "";
}

inline void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << "n,v,gap,gap_decimal,classification,witness\n";
    for (const auto& r : records)
        os << r.v.size() << ',' << r.v.str() << ',' << gap_string(r.gap) << ',' << gap_decimal(r.gap) << ','
           << to_string(r.classification) << ',' << (r.witness ? r.witness->str() : "") << '\n';
    SweepSummary s = summarize(records);
    os << "# total=" << s.total << " below_bound=" << s.below << " at_bound=" << s.at << " above_bound=" << s.above
       << " unresolved=" << s.unresolved << '\n';
}

inline nlohmann::json sweep_json(const std::vector<SweepRecord>& records) {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json rec = {{"n", r.v.size()},
                              {"v", r.v.values()},
                              {"gap", gap_string(r.gap)},
                              {"gap_decimal", gap_decimal(r.gap)},
                              {"classification", to_string(r.classification)}};
        if (r.witness) {
            std::vector<std::string> w;
            for (const auto& x : r.witness->values()) w.push_back(x.str());
            rec["witness"] = w;
        }
        rs.push_back(rec);
    }
    SweepSummary s = summarize(records);
    return {{"records", rs},
            {"footer",
             {{"total", s.total}, {"below_bound", s.below}, {"at_bound", s.at}, {"above_bound", s.above}, {"unresolved", s.unresolved}}}};
}

inline void write_json(std::ostream& os, const std::vector<SweepRecord>& records) { os << sweep_json(records).dump(2) << '\n'; }

enum class OutputFormat { Csv, Json };

// Writes through a sibling temporary file and renames it into place; on failure nothing is left behind.
inline void write_sweep_file(const std::filesystem::path& path, const std::vector<SweepRecord>& records, OutputFormat format) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    try {
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw Error("cannot open " + tmp.string() + " for writing");
            if (format == OutputFormat::Csv)
                write_csv(os, records);
            else
                write_json(os, records);
            os.flush();
            if (!os) throw Error("write to " + tmp.string() + " failed");
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

}  // namespace lonely
