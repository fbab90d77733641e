#include "tder/golden.hpp"

namespace tder::golden {

const std::vector<PrintedMatrix>& printed_matrices() {
  static const std::vector<PrintedMatrix> m = {
      {"c18-i",
       R"(
1 1 1 1 1 1 0 0 1 0 0 1 0 0 0 0 0 0
0 0 0 0 1 1 1 1 1 1 0 0 1 0 0 1 0 0
0 0 0 0 0 0 1 1 1 1 1 1 0 0 1 0 0 1
0 1 0 0 0 0 0 0 1 1 1 1 1 1 0 0 1 0
1 0 0 1 0 0 0 0 0 0 1 1 1 1 1 1 0 0
0 0 1 0 0 1 0 0 0 0 0 0 1 1 1 1 1 1
1 1 0 0 1 0 0 1 0 0 0 0 0 0 1 1 1 1
1 1 1 1 0 0 1 0 0 1 0 0 0 0 0 0 1 1
)"},
      {"c18-ii",
       R"(
1 1 0 1 1 0 0 1 0 1 0 0 0 1 0 0 1 1
0 0 1 1 1 1 0 1 1 0 0 1 0 1 0 0 0 1
0 0 0 1 0 0 1 1 1 1 0 1 1 0 0 1 0 1
0 1 0 1 0 0 0 1 0 0 1 1 1 1 0 1 1 0
0 1 1 0 0 1 0 1 0 0 0 1 0 0 1 1 1 1
1 1 1 1 0 1 1 0 0 1 0 1 0 0 0 1 0 0
0 1 0 0 1 1 1 1 0 1 1 0 0 1 0 1 0 0
0 1 0 0 0 1 0 0 1 1 1 1 0 1 1 0 0 1
1 0 0 1 0 1 0 0 0 1 0 0 1 1 1 1 0 1
)"},
      {"c14-d1",
       R"(
1 1 1 1 1 0 1 0 0 1 0 0 0 0
0 0 1 1 1 1 1 0 1 0 0 1 0 0
0 0 0 0 1 1 1 1 1 0 1 0 0 1
0 1 0 0 0 0 1 1 1 1 1 0 1 0
1 0 0 1 0 0 0 0 1 1 1 1 1 0
1 0 1 0 0 1 0 0 0 0 1 1 1 1
1 1 1 0 1 0 0 1 0 0 0 0 1 1
)"},
      {"c14-d3",
       R"(
1 1 1 1 0 1 0 0 1 0 0 1 0 0
0 0 1 1 1 1 0 1 0 0 1 0 0 1
0 1 0 0 1 1 1 1 0 1 0 0 1 0
1 0 0 1 0 0 1 1 1 1 0 1 0 0
0 0 1 0 0 1 0 0 1 1 1 1 0 1
0 1 0 0 1 0 0 1 0 0 1 1 1 1
1 1 0 1 0 0 1 0 0 1 0 0 1 1
)"},
      {"c24",
       R"(
1 1 0 1 1 1 0 1 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 2 2 0 2 2 2 0 2 0 2 0 0 2 0 2 0 0 0 0
1 0 0 1 0 1 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 0 1 0
2 2 0 2 0 2 0 0 2 0 2 0 0 0 0 0 0 0 0 0 2 2 0 2
0 0 0 0 0 0 1 1 0 1 1 1 0 1 0 1 0 0 1 0 1 0 0 0
0 2 0 0 0 0 0 0 0 0 0 2 2 0 2 2 2 0 2 0 2 0 0 2
1 1 1 0 1 0 1 0 0 1 0 1 0 0 0 0 0 0 0 0 0 1 1 0
0 0 2 2 0 2 2 2 0 2 0 2 0 0 2 0 2 0 0 0 0 0 0 0
1 0 1 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 0 1 0 1 0 0
2 0 2 0 0 2 0 2 0 0 0 0 0 0 0 0 0 2 2 0 2 2 2 0
0 0 0 1 1 0 1 1 1 0 1 0 1 0 0 1 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 2 2 0 2 2 2 0 2 0 2 0 0 2 0 2 0
0 1 0 1 0 0 1 0 1 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1
2 0 2 2 2 0 2 0 2 0 0 2 0 2 0 0 0 0 0 0 0 0 0 2
0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 0 1 0 1 0 0 1 0 1
0 0 2 0 2 0 0 0 0 0 0 0 0 0 2 2 0 2 2 2 0 2 0 2
)"},
  };
  return m;
}

}  // namespace tder::golden
