#include <algorithm>
#include <atomic>
#include <thread>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/errors.hpp"
#include "gaugeball/random.hpp"

namespace gaugeball {

namespace {

struct SampleOutcome {
  int dim_cc = 0;
  std::optional<std::string> certificate_error;
};

// Mixes three kinds of point sets: free points from the rational box, points
// on bd(C) along random rays, and relative-interior points of random faces.
// The last kind hits the degenerate configurations that have dim cc > 0.
std::vector<PointSet> draw_samples(const GaugeBody& c, const HarnessOptions& opt) {
  Rng rng(opt.seed);
  const std::size_t n = c.dim();
  const auto faces = enumerate_faces(c, static_cast<int>(n));
  std::vector<PointSet> samples;
  samples.reserve(static_cast<std::size_t>(std::max(opt.trials, 0)));
  for (int t = 0; t < opt.trials; ++t) {
    const auto size = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(n) + 1));
    PointSet pts;
    while (pts.size() < size) {
      switch (t % 3) {
        case 0:
          pts.push_back(rng.vector(n));
          break;
        case 1: {
          QVector d = rng.vector(n);
          if (d.is_zero()) break;
          pts.push_back(d * Rational(1 / gauge_eval(c, d)));
          break;
        }
        default: {
          const auto& f = faces[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(faces.size()) - 1))];
          pts.push_back(f.relint);
          break;
        }
      }
    }
    samples.push_back(std::move(pts));
  }
  return samples;
}

unsigned worker_count(const HarnessOptions& opt, std::size_t jobs) {
  unsigned t = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Evaluates every sample; results land at their sample index, so the merge
// order never depends on scheduling.
std::vector<SampleOutcome> evaluate(const GaugeBody& c, const std::vector<PointSet>& samples,
                                    const HarnessOptions& opt) {
  std::vector<SampleOutcome> out(samples.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < samples.size(); i = cursor++) {
      const auto res = circumradius(samples[i], c);
      out[i].dim_cc = res.dim_cc;
      if (res.radius > 0) {
        out[i].certificate_error = verify_certificate(samples[i], c, extract_certificate(samples[i], c, res));
      }
    }
  };
  const unsigned workers = worker_count(opt, samples.size());
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

CheckReport start_report(std::string name, int k, const HarnessOptions& opt) {
  CheckReport r;
  r.check = std::move(name);
  r.k = k;
  r.trials = opt.trials;
  r.seed = opt.seed;
  return r;
}

void record_witness(CheckReport& r, const GaugeBody& c, std::optional<WitnessK> w, const std::string& kind) {
  r.witness_found = w.has_value();
  if (w) {
    const auto err = verify_witness(c, *w);
    r.witness_valid = !err;
    if (err) r.violations.push_back({kind, "witness failed verification: " + *err, r.k, w->points});
  }
  r.witness = std::move(w);
}

// Runs the samples; `possible` says whether dim cc > k is allowed at all.
void scan_samples(CheckReport& r, const GaugeBody& c, const HarnessOptions& opt, bool possible,
                  const std::string& kind, const std::string& message) {
  const auto samples = draw_samples(c, opt);
  const auto outcomes = evaluate(c, samples, opt);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (outcomes[i].certificate_error) {
      r.violations.push_back({"certificate", *outcomes[i].certificate_error, r.k, samples[i]});
    }
    if (outcomes[i].dim_cc > r.k) {
      ++r.samples_above_k;
      if (!possible) r.violations.push_back({kind, message + " (dim_cc = " + std::to_string(outcomes[i].dim_cc) + ")", r.k, samples[i]});
    }
  }
}

}  // namespace

CheckReport check_witness_equivalence(const GaugeBody& c, int k, const HarnessOptions& opt) {
  CheckReport r = start_report("equivalence", k, opt);
  record_witness(r, c, witness_search(c, k), "witness");
  scan_samples(r, c, opt, r.witness_found, "sample-without-witness",
               "sample has dim_cc > k but witness_search found nothing");
  return r;
}

CheckReport check_symmetric_dimension(const GaugeBody& b, int k, const HarnessOptions& opt) {
  if (!b.symmetric()) throw PreconditionError("symmetric check needs a centrally symmetric gauge");
  CheckReport r = start_report("symmetric", k, opt);
  record_witness(r, b, symmetric_witness(b, k), "symmetric-witness");
  const bool searched = witness_search(b, k).has_value();
  if (searched != r.witness_found) {
    r.violations.push_back({"search-mismatch",
                            std::string("symmetric_witness ") + (r.witness_found ? "found" : "did not find") +
                                " a witness but witness_search " + (searched ? "did" : "did not"),
                            k,
                            {}});
  }
  scan_samples(r, b, opt, r.witness_found, "sample-without-support-set",
               "sample has dim_cc > k but no support set has dimension > k");
  return r;
}

CheckReport check_planar_uniqueness(const GaugeBody& c, const HarnessOptions& opt) {
  if (c.dim() != 2) throw UnsupportedDimension("planar check needs a 2-dimensional gauge");
  CheckReport r = start_report("planar", 0, opt);
  const bool opposing = opposing_segments_2d(c);
  record_witness(r, c, witness_search(c, 0), "witness");
  if (opposing != r.witness_found) {
    r.violations.push_back({"opposing-mismatch",
                            std::string("opposing_segments_2d is ") + (opposing ? "true" : "false") +
                                " but witness_search " + (r.witness_found ? "found" : "did not find") + " a witness",
                            0,
                            {}});
  }
  scan_samples(r, c, opt, opposing, "sample-without-opposing-edges",
               "sample has a non-unique circumcenter but no anti-parallel edges exist");
  return r;
}

}  // namespace gaugeball
