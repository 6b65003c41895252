#include "mtkit/census.hpp"

#include <future>
#include <sstream>
#include <thread>

#include "mtkit/enumerate.hpp"
#include "mtkit/functor.hpp"

namespace mtkit {

namespace {

CensusRow classify_row(const FinSpace& space) {
  CensusRow row;
  row.n = space.points();
  row.space_id = space.id();
  row.profile = classify(space);
  row.frame = frame_profile(omega(space).frame);
  return row;
}

}  // namespace

std::vector<CensusRow> census(int n) {
  const std::vector<FinSpace> spaces = enumerate_topologies(n);
  std::vector<CensusRow> rows(spaces.size());

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (spaces.size() < 2 * workers) workers = 1;

  if (workers == 1) {
    for (std::size_t i = 0; i < spaces.size(); ++i) rows[i] = classify_row(spaces[i]);
    return rows;
  }

  // Profiles for distinct spaces are independent; rows land at their
  // enumeration index, so the merged result does not depend on scheduling.
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < spaces.size(); i += workers)
        rows[i] = classify_row(spaces[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return rows;
}

std::string render_census(int n, const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "census n=" << n << " spaces=" << rows.size() << "\n";
  out << "space_id : T0 T1/2 T1 wsob sob T2 T3 T3.5 T4 | sfit fit haus reg creg norm sptl\n";

  long t0 = 0, th = 0, t1 = 0, ws = 0, so = 0, t2 = 0, t3 = 0, t35 = 0, t4 = 0;
  auto mark = [](bool b) { return b ? '1' : '0'; };
  for (const auto& r : rows) {
    const auto& p = r.profile;
    out << r.space_id << " : " << mark(p.t0) << ' ' << mark(p.t_half) << ' ' << mark(p.t1)
        << ' ' << mark(p.weakly_sober) << ' ' << mark(p.sober) << ' ' << mark(p.t2) << ' '
        << mark(p.t3) << ' ' << mark(p.t3half) << ' ' << mark(p.t4) << " | "
        << mark(r.frame.subfit) << ' ' << mark(r.frame.fit) << ' ' << mark(r.frame.hausdorff)
        << ' ' << mark(r.frame.regular) << ' ' << mark(r.frame.completely_regular) << ' '
        << mark(r.frame.normal) << ' ' << mark(r.frame.spatial) << "\n";
    t0 += p.t0;
    th += p.t_half;
    t1 += p.t1;
    ws += p.weakly_sober;
    so += p.sober;
    t2 += p.t2;
    t3 += p.t3;
    t35 += p.t3half;
    t4 += p.t4;
  }
  out << "totals: T0=" << t0 << " T1/2=" << th << " T1=" << t1 << " wsober=" << ws
      << " sober=" << so << " T2=" << t2 << " T3=" << t3 << " T3.5=" << t35 << " T4=" << t4
      << "\n";
  return out.str();
}

}  // namespace mtkit
