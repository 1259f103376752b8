// Times the serial catalog/classification kernels against the OpenMP ones
// and checks they produce identical output.

#include <chrono>
#include <cstdio>

#include "rcc/catalog.hpp"
#include "rcc/classifier.hpp"

using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
  int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "parallel ms", "equal");

  for (long long lambda : {5, 6, 7, 8}) {
    rcc::CatalogQuery q;
    q.lambda = lambda;
    auto t0 = clk::now();
    auto serial = rcc::sequences_with_lambda(q, 1);
    double ts = ms_since(t0);
    t0 = clk::now();
    auto parallel = rcc::sequences_with_lambda(q, jobs);
    double tp = ms_since(t0);
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
      same = serial[i].seq == parallel[i].seq;
    std::printf("catalog lambda=%-20lld %10.1f %10.1f %8s\n", lambda, ts, tp,
                same ? "yes" : "NO");
    if (!same) return 1;
  }

  for (int cusps : {4, 5}) {
    rcc::ClassifyOptions opt;
    opt.cusps = cusps;
    opt.jobs = 1;
    auto t0 = clk::now();
    auto serial = rcc::run_classification(opt);
    double ts = ms_since(t0);
    opt.jobs = jobs;
    t0 = clk::now();
    auto parallel = rcc::run_classification(opt);
    double tp = ms_since(t0);
    bool same = serial.cases.size() == parallel.cases.size();
    for (size_t i = 0; same && i < serial.cases.size(); ++i)
      same = serial.cases[i].label == parallel.cases[i].label &&
             serial.cases[i].cfg.pair_texts() == parallel.cases[i].cfg.pair_texts();
    std::printf("classify cusps=%-19d %10.1f %10.1f %8s\n", cusps, ts, tp,
                same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
