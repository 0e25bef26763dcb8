#include "toric/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "toric/error.hpp"
#include "toric/tile.hpp"

namespace toric {

namespace {

struct Bits {
    bool left, top, right, bottom;
};

const std::array<Bits, tile_kinds>& tile_bits() {
    static const auto bits = [] {
        std::array<Bits, tile_kinds> b{};
        for (int k = 0; k < tile_kinds; ++k) {
            const auto& p = tile_profiles()[std::size_t(k)];
            b[std::size_t(k)] = {p.left, p.top, p.right, p.bottom};
        }
        return b;
    }();
    return bits;
}

int digit_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch == 'a') return 10;
    return -1;
}

class Search {
public:
    Search(const EnumOptions& opts, const std::function<void(std::string_view)>& emit)
        : n_(opts.n), reduce_(opts.symmetry_reduce), emit_(emit), code_(std::size_t(n_ * n_), '0'),
          kinds_(std::size_t(n_ * n_), 0) {
        for (char ch : opts.prefix) forced_.push_back(digit_value(ch));
    }

    void run() { place(0); }

private:
    void place(int pos) {
        if (pos == n_ * n_) {
            if (!reduce_ || is_canonical(code_, n_)) emit_(code_);
            return;
        }
        const int r = pos / n_, c = pos % n_;
        const auto& bits = tile_bits();
        for (int k = 0; k < tile_kinds; ++k) {
            if (pos < int(forced_.size()) && k != forced_[std::size_t(pos)]) continue;
            const Bits& b = bits[std::size_t(k)];
            if (c > 0 && b.left != bits[std::size_t(kinds_[std::size_t(pos - 1)])].right) continue;
            if (r > 0 && b.top != bits[std::size_t(kinds_[std::size_t(pos - n_)])].bottom) continue;
            // Row wrap: the last cell of a row meets the first one.
            if (c == n_ - 1 && b.right != (c == 0 ? b.left : bits[std::size_t(kinds_[std::size_t(pos - c)])].left))
                continue;
            // Column wrap, checked as soon as the bottom row is reached.
            if (r == n_ - 1 && b.bottom != (r == 0 ? b.top : bits[std::size_t(kinds_[std::size_t(c)])].top)) continue;
            kinds_[std::size_t(pos)] = k;
            code_[std::size_t(pos)] = tile_digit(Tile{k});
            place(pos + 1);
        }
    }

    int n_;
    bool reduce_;
    const std::function<void(std::string_view)>& emit_;
    std::string code_;
    std::vector<int> kinds_;
    std::vector<int> forced_;
};

void check_options(const EnumOptions& opts) {
    if (opts.n < 1) throw DomainError("enumeration needs n >= 1");
    if (int(opts.prefix.size()) > opts.n) throw DomainError("prefix is longer than a row");
    for (char ch : opts.prefix)
        if (digit_value(ch) < 0) throw ParseError(std::string("invalid tile digit '") + ch + "' in prefix");
}

}  // namespace

bool is_canonical(std::string_view code, int n) {
    for (int dr = 0; dr < n; ++dr) {
        for (int dc = 0; dc < n; ++dc) {
            if (dr == 0 && dc == 0) continue;
            // Compare the translate starting at cell (dr, dc) with the code.
            for (int i = 0; i < n * n; ++i) {
                const int r = (i / n + dr) % n, c = (i % n + dc) % n;
                const char t = code[std::size_t(r * n + c)];
                const char s = code[std::size_t(i)];
                if (t < s) return false;
                if (t > s) break;
            }
        }
    }
    return true;
}

void enumerate(const EnumOptions& opts, const std::function<void(std::string_view)>& emit) {
    check_options(opts);
    Search(opts, emit).run();
}

std::vector<std::string> partition_prefixes(const EnumOptions& opts, int extra) {
    check_options(opts);
    std::vector<std::string> out{opts.prefix};
    const int target = std::min<int>(opts.n, int(opts.prefix.size()) + extra);
    const auto& bits = tile_bits();
    while (!out.empty() && int(out.front().size()) < target) {
        std::vector<std::string> next;
        for (const auto& p : out) {
            for (int k = 0; k < tile_kinds; ++k) {
                if (!p.empty() && bits[std::size_t(k)].left != bits[std::size_t(digit_value(p.back()))].right) continue;
                next.push_back(p + tile_digit(Tile{k}));
            }
        }
        out = std::move(next);
    }
    return out;
}

int default_jobs() { return std::max(1, int(std::thread::hardware_concurrency())); }

void parallel_for(int tasks, int jobs, const std::function<void(int, int)>& work) {
    jobs = std::max(1, std::min(jobs, tasks));
    if (jobs == 1) {
        for (int i = 0; i < tasks; ++i) work(i, 0);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
            for (int i; (i = next++) < tasks;) {
                try {
                    work(i, j);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = tasks;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<std::string> enumerate_codes(const EnumOptions& opts, int jobs) {
    const auto prefixes = partition_prefixes(opts, 2);
    std::vector<std::vector<std::string>> parts(prefixes.size());
    parallel_for(int(prefixes.size()), jobs, [&](int i, int) {
        EnumOptions sub = opts;
        sub.prefix = prefixes[std::size_t(i)];
        enumerate(sub, [&](std::string_view code) { parts[std::size_t(i)].emplace_back(code); });
    });
    // Prefixes are in lexicographic order, so concatenation is sorted.
    std::vector<std::string> out;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

std::uint64_t count(const EnumOptions& opts, int jobs) {
    const auto prefixes = partition_prefixes(opts, 2);
    std::vector<std::uint64_t> counts(prefixes.size(), 0);
    parallel_for(int(prefixes.size()), jobs, [&](int i, int) {
        EnumOptions sub = opts;
        sub.prefix = prefixes[std::size_t(i)];
        enumerate(sub, [&](std::string_view) { ++counts[std::size_t(i)]; });
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

}  // namespace toric
