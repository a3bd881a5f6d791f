#include "constj/count.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "constj/version.hpp"

namespace constj::count {

namespace {

struct PlaceEval {
  enum class Kind { Infinity, Linear, General };
  Kind kind = Kind::Linear;
  std::uint32_t c0 = 0;
  std::vector<std::uint32_t> coeffs;  // General: dehomogenized, low-first
  std::vector<std::uint32_t> deriv;   // General: derivative, low-first
  int m = 0;
};

std::vector<PlaceEval> compile_places(const forms::FactoredForm& f) {
  if (!f.is_concrete()) throw ValidationError("point counting needs a concrete form");
  const std::uint64_t p = f.p();
  std::vector<PlaceEval> out;
  for (const auto& fac : f.factors()) {
    PlaceEval pe;
    pe.m = fac.multiplicity;
    const auto& pl = fac.place;
    if (pl.kind() == forms::Place::Kind::Infinity) {
      pe.kind = PlaceEval::Kind::Infinity;
    } else if (pl.degree() == 1) {
      pe.kind = PlaceEval::Kind::Linear;
      pe.c0 = static_cast<std::uint32_t>(pl.coeffs()[0]);
    } else {
      pe.kind = PlaceEval::Kind::General;
      for (auto c : pl.coeffs()) pe.coeffs.push_back(static_cast<std::uint32_t>(c));
      for (std::size_t j = 1; j < pl.coeffs().size(); ++j) {
        pe.deriv.push_back(static_cast<std::uint32_t>(pl.coeffs()[j] % p * (j % p) % p));
      }
    }
    out.push_back(std::move(pe));
  }
  return out;
}

inline std::uint32_t add_const(std::uint32_t v, std::uint32_t c, std::uint32_t p) {
  const std::uint32_t low = v % p;
  return v - low + (low + c) % p;
}

inline std::uint32_t horner(const gf::LogTable& t, std::span<const std::uint32_t> coeffs, std::uint32_t x,
                            std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) v = add_const(t.mul(v, x), coeffs[j], p);
  return v;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Partial sums over finite points x in [begin, end).
void sweep_range(const gf::LogTable& table, const std::vector<PlaceEval>& places, const std::vector<std::uint64_t>& d_free,
                 const std::vector<std::vector<std::uint64_t>>& d_zero, std::uint32_t begin, std::uint32_t end,
                 std::vector<std::uint64_t>& acc_counts) {
  const auto p = static_cast<std::uint32_t>(table.field()->p());
  const std::size_t ncov = d_free.size();
  for (std::uint32_t x = begin; x < end; ++x) {
    std::uint64_t acc = 0;
    int zero = -1;
    std::uint32_t zero_deriv = 1;
    for (std::size_t j = 0; j < places.size(); ++j) {
      const auto& pe = places[j];
      std::uint32_t v;
      switch (pe.kind) {
        case PlaceEval::Kind::Infinity:
          continue;
        case PlaceEval::Kind::Linear:
          v = add_const(x, pe.c0, p);
          break;
        default:
          v = horner(table, pe.coeffs, x, p);
          break;
      }
      if (v == 0) {
        zero = static_cast<int>(j);
        if (pe.kind == PlaceEval::Kind::General) zero_deriv = horner(table, pe.deriv, x, p);
        continue;
      }
      acc += static_cast<std::uint64_t>(pe.m) * table.log(v);
    }
    if (zero < 0) {
      for (std::size_t c = 0; c < ncov; ++c) {
        if (acc % d_free[c] == 0) acc_counts[c] += d_free[c];
      }
    } else {
      acc += static_cast<std::uint64_t>(places[static_cast<std::size_t>(zero)].m) * table.log(zero_deriv);
      for (std::size_t c = 0; c < ncov; ++c) {
        const std::uint64_t d = d_zero[c][static_cast<std::size_t>(zero)];
        if (acc % d == 0) acc_counts[c] += d;
      }
    }
  }
}

Int reference_count_one(const forms::FactoredForm& f, int a, const gf::Field& ctx) {
  Int total = 0;
  for (const auto& P : gf::enumerate_p1(ctx)) {
    const auto v = forms::evaluate(f, P);
    if (!v.is_zero()) {
      total += gf::nth_power_count(v, a);
      continue;
    }
    const auto lu = forms::local_unit(f, P);
    const int d = std::gcd(a, lu.multiplicity);
    total += d == 1 ? 1 : gf::nth_power_count(lu.unit, d);
  }
  return total;
}

}  // namespace

std::vector<Int> count_points_multi(const forms::FactoredForm& f, std::span<const int> covers, const gf::Field& ctx,
                                    const SweepOptions& opts) {
  if (f.p() != ctx->p()) throw ValidationError("field characteristic does not match the form");
  for (int a : covers) (void)curve::make_curve(f, a);

  if (!gf::LogTable::supported(*ctx)) {
    std::vector<Int> out;
    for (int a : covers) out.push_back(reference_count_one(f, a, ctx));
    return out;
  }

  const auto table = gf::LogTable::shared(ctx, opts.jobs);
  const auto places = compile_places(f);
  const std::uint64_t q = ctx->q64();
  const std::uint64_t order = q - 1;

  std::vector<std::uint64_t> d_free;
  std::vector<std::vector<std::uint64_t>> d_zero;
  for (int a : covers) {
    d_free.push_back(gcd64(static_cast<std::uint64_t>(a), order));
    std::vector<std::uint64_t> dz;
    for (const auto& pe : places) dz.push_back(gcd64(gcd64(static_cast<std::uint64_t>(a), pe.m), order));
    d_zero.push_back(std::move(dz));
  }

  const int workers = std::max(1, std::min<int>(opts.jobs, static_cast<int>(q / 1024) + 1));
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers),
                                                  std::vector<std::uint64_t>(covers.size(), 0));
  const std::uint64_t chunk = (q + workers - 1) / workers;
  if (workers == 1) {
    sweep_range(*table, places, d_free, d_zero, 0, static_cast<std::uint32_t>(q), partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(q, w * chunk);
      const std::uint64_t e = std::min(q, b + chunk);
      threads.emplace_back([&, w, b, e] {
        sweep_range(*table, places, d_free, d_zero, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(e),
                    partial[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& th : threads) th.join();
  }

  // (1:0): only the place t can vanish there and every other place is 1.
  std::vector<Int> out(covers.size(), 0);
  for (std::size_t c = 0; c < covers.size(); ++c) {
    for (const auto& part : partial) out[c] += static_cast<Int>(part[c]);
    std::uint64_t at_inf = d_free[c];
    for (std::size_t j = 0; j < places.size(); ++j) {
      if (places[j].kind == PlaceEval::Kind::Infinity) at_inf = d_zero[c][j];
    }
    out[c] += static_cast<Int>(at_inf);
  }
  return out;
}

Int count_points(const curve::CurveSpec& curve, const gf::Field& ctx, const SweepOptions& opts) {
  const int covers[] = {curve.a};
  return count_points_multi(curve.f, covers, ctx, opts)[0];
}

Int count_points_reference(const curve::CurveSpec& curve, const gf::Field& ctx) {
  if (curve.f.p() != ctx->p()) throw ValidationError("field characteristic does not match the form");
  return reference_count_one(curve.f, curve.a, ctx);
}

bool within_weil_bound(const curve::CurveSpec& curve, UInt q, Int count) {
  const int e = curve::components(curve.f, curve.a);
  const auto rational = static_cast<Int>(std::gcd(static_cast<std::uint64_t>(e), static_cast<std::uint64_t>((q - 1) % e)));
  const Int g = curve::h1_dim(curve.f, curve.a) / 2;
  const Int qi = static_cast<Int>(q);
  const Int dev = checked_sub(count, checked_mul(rational, checked_add(qi, 1)));
  return checked_mul(dev, dev) <= checked_mul(checked_mul(4 * g, g), qi);
}

std::string curve_key(const curve::CurveSpec& curve) {
  const std::string text = "a" + std::to_string(curve.a) + "|" + curve.f.canonical_key();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// ---------------------------------------------------------------------------

CountCache::CountCache(std::filesystem::path dir) : file_(std::move(dir) / kFileName) {
  std::filesystem::create_directories(file_.parent_path());
  std::ifstream in(file_);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string p_s, i_s, key, count_s, version, extra;
    if (!(ls >> p_s >> i_s >> key >> count_s >> version) || (ls >> extra)) {
      warnings_.push_back(file_.string() + ":" + std::to_string(lineno) + ": malformed cache record ignored");
      continue;
    }
    try {
      const Int p = parse_int(p_s);
      const Int level = parse_int(i_s);
      const Int count = parse_int(count_s);
      if (p <= 0 || level <= 0 || level > 1000 || count < 0 || key.size() != 16) throw ValidationError("range");
      if (version != kToolVersion) continue;
      records_[{static_cast<std::uint64_t>(p), static_cast<int>(level), key}] = count;
    } catch (const std::exception&) {
      warnings_.push_back(file_.string() + ":" + std::to_string(lineno) + ": malformed cache record ignored");
    }
  }
}

std::optional<Int> CountCache::lookup(std::uint64_t p, int level, const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = records_.find({p, level, key});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(std::uint64_t p, int level, const std::string& key, Int count) {
  std::lock_guard lock(mu_);
  records_[{p, level, key}] = count;
  const std::string line =
      std::to_string(p) + " " + std::to_string(level) + " " + key + " " + to_string(count) + " " + kToolVersion + "\n";
  std::ofstream out(file_, std::ios::app);
  out << line << std::flush;
  if (!out) warnings_.push_back("could not append to " + file_.string());
}

std::vector<std::string> CountCache::take_warnings() {
  std::lock_guard lock(mu_);
  return std::exchange(warnings_, {});
}

// ---------------------------------------------------------------------------

std::vector<CountSeries> count_series_multi(const forms::FactoredForm& f, std::span<const SeriesRequest> requests,
                                            std::uint64_t p, CountCache* cache, const SweepOptions& opts,
                                            SeriesStats* stats) {
  SeriesStats local;
  SeriesStats& st = stats ? *stats : local;
  std::vector<CountSeries> out;
  std::vector<std::string> keys;
  int top = 0;
  for (const auto& r : requests) {
    if (r.i_max < 0) throw ValidationError("i_max must be >= 0");
    out.push_back({curve::make_curve(f, r.a), p, {}});
    keys.push_back(curve_key(out.back().curve));
    top = std::max(top, r.i_max);
  }
  if (cache) {
    for (auto& w : cache->take_warnings()) st.warnings.push_back(std::move(w));
  }

  for (int level = 1; level <= top; ++level) {
    gf::Field ctx;
    std::vector<std::size_t> todo;
    std::vector<int> todo_covers;
    for (std::size_t r = 0; r < requests.size(); ++r) {
      if (level > requests[r].i_max) continue;
      std::optional<Int> hit = cache ? cache->lookup(p, level, keys[r]) : std::nullopt;
      if (hit) {
        if (!ctx) ctx = gf::make_field(p, level);
        if (within_weil_bound(out[r].curve, ctx->q(), *hit)) {
          out[r].counts.push_back(*hit);
          ++st.cache_hits;
          continue;
        }
        st.warnings.push_back("cache record for p=" + std::to_string(p) + " i=" + std::to_string(level) + " key=" +
                              keys[r] + " violates the Weil bound; recounting");
      }
      out[r].counts.push_back(0);
      todo.push_back(r);
      todo_covers.push_back(requests[r].a);
    }
    if (todo.empty()) continue;
    if (!ctx) ctx = gf::make_field(p, level);
    const auto counts = count_points_multi(f, todo_covers, ctx, opts);
    ++st.sweeps;
    for (std::size_t t = 0; t < todo.size(); ++t) {
      auto& series = out[todo[t]];
      if (!within_weil_bound(series.curve, ctx->q(), counts[t])) {
        throw InvariantViolation("count " + to_string(counts[t]) + " over " + ctx->describe() +
                                 " violates the Weil bound for a=" + std::to_string(series.curve.a));
      }
      series.counts.back() = counts[t];
      if (cache) cache->store(p, level, keys[todo[t]], counts[t]);
    }
  }
  if (cache) {
    for (auto& w : cache->take_warnings()) st.warnings.push_back(std::move(w));
  }
  return out;
}

CountSeries count_series(const curve::CurveSpec& curve, std::uint64_t p, int i_max, CountCache* cache,
                         const SweepOptions& opts, SeriesStats* stats) {
  const SeriesRequest req[] = {{curve.a, i_max}};
  return std::move(count_series_multi(curve.f, req, p, cache, opts, stats)[0]);
}

}  // namespace constj::count
