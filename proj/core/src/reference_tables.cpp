#include "unilift/equivalence.hpp"

namespace unilift {

// Literal matrices from the published classification. They are checked
// against the census, never used to build it.
std::vector<ReferenceGroup> reference_groups() {
  std::vector<ReferenceGroup> groups;

  groups.push_back({"order4-det3", 4, 3, true,
                    {
                        {"det3-a", BinaryMatrix{{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}}},
                        {"det3-b", BinaryMatrix{{1, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}},
                    }});

  groups.push_back({"order5-det5", 5, 5, true,
                    {
                        {"M1", BinaryMatrix{{1, 1, 1, 0, 0},
                                            {1, 1, 0, 1, 0},
                                            {1, 0, 1, 1, 0},
                                            {0, 1, 1, 1, 1},
                                            {1, 0, 0, 0, 1}}},
                        {"M2", BinaryMatrix{{1, 1, 1, 0, 0},
                                            {1, 0, 0, 1, 0},
                                            {0, 1, 0, 1, 0},
                                            {0, 0, 1, 1, 1},
                                            {1, 1, 0, 0, 1}}},
                        {"M3", BinaryMatrix{{1, 1, 1, 0, 0},
                                            {1, 1, 0, 1, 0},
                                            {1, 0, 1, 1, 1},
                                            {0, 1, 1, 1, 1},
                                            {1, 1, 0, 0, 1}}},
                    }});

  // Classes where the first extra row alone does not give a unimodular
  // extension; the second extra row is needed there.
  groups.push_back({"order5-det3-second-row", 5, 3, false,
                    {
                        {"X1", BinaryMatrix{{1, 0, 1, 1, 0},
                                            {0, 1, 1, 0, 0},
                                            {0, 1, 0, 1, 0},
                                            {0, 0, 1, 1, 1},
                                            {1, 1, 1, 1, 1}}},
                        {"X2", BinaryMatrix{{1, 0, 1, 1, 0},
                                            {0, 1, 1, 0, 0},
                                            {0, 1, 0, 1, 0},
                                            {0, 0, 1, 1, 1},
                                            {1, 0, 1, 0, 1}}},
                        {"X3", BinaryMatrix{{1, 1, 1, 0, 0},
                                            {1, 1, 0, 1, 0},
                                            {1, 0, 1, 1, 0},
                                            {1, 0, 0, 0, 1},
                                            {0, 1, 0, 0, 1}}},
                    }});

  return groups;
}

}  // namespace unilift
