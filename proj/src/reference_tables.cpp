#include "seriesforge/reference_tables.hpp"

namespace seriesforge::reference {

const Grid& ultrametric_table() {
  static const Grid g{
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 2, 8, 52, 472, 5504, 78416, 1320064},
      {1, 3, 21, 243, 3933, 81819, 2080053, 62490339},
      {1, 4, 40, 664, 15424, 460576, 16808320, 724904896},
      {1, 5, 65, 1405, 42505, 1653125, 78578225, 4414067725},
      {1, 6, 96, 2556, 95256, 4563936, 267253776, 18494891136},
      {1, 7, 133, 4207, 186277, 10603999, 737769781, 60662126959},
      {1, 8, 176, 6448, 330688, 21804224, 1757138048, 167347010944},
  };
  return g;
}

const Grid& fully_colored_labeled_table() {
  static const Grid g{
      {1, 0, 0, 0, 0, 0},
      {2, 2, 8, 52, 472, 5504},
      {3, 12, 168, 3888, 125856, 5236416},
      {4, 36, 1080, 53784, 3748032, 335759904},
      {5, 80, 4160, 359680, 43525120, 6771200000},
      {6, 150, 12000, 1597500, 297675000, 71311500000},
  };
  return g;
}

const Grid& mobile_table() {
  static const Grid g{
      {1, 1, 2, 6, 24, 120, 720, 5040},
      {1, 2, 10, 82, 938, 13778, 247210, 5240338},
      {1, 3, 24, 318, 5892, 140304, 4082712, 140389824},
      {1, 4, 44, 804, 20556, 675588, 27135468, 1288020708},
      {1, 5, 70, 1630, 53120, 2225480, 113950720, 6895234480},
      {1, 6, 102, 2886, 114294, 5819190, 362107110, 26628964710},
      {1, 7, 140, 4662, 217308, 13022688, 953817480, 82561002048},
      {1, 8, 184, 7048, 377912, 26052104, 2195014072, 218563826824},
  };
  return g;
}

const Grid& multipartite_unlabeled_table() {
  static const Grid g{
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 2, 4, 10, 24, 66, 180, 522},
      {1, 3, 9, 39, 153, 723, 3321, 16479},
      {1, 4, 16, 100, 544, 3652, 23536, 165532},
      {1, 5, 25, 205, 1425, 12405, 102825, 936765},
      {1, 6, 36, 366, 3096, 33126, 335556, 3755286},
      {1, 7, 49, 595, 5929, 75271, 900865, 11958667},
      {1, 8, 64, 904, 10368, 152328, 2102976, 32301144},
  };
  return g;
}

const Grid& fully_colored_unlabeled_table() {
  static const Grid g{
      {1, 0, 0, 0, 0, 0},
      {2, 2, 4, 10, 24, 66},
      {3, 12, 72, 624, 4896, 46272},
      {4, 36, 432, 8100, 132192, 2662308},
      {5, 80, 1600, 52480, 1459200, 50810880},
      {6, 150, 4500, 228750, 9675000, 517593750},
  };
  return g;
}

const Grid& riordan_triangle_rows() {
  static const Grid g{
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 2, 3, 4, 5, 6, 7, 8},
      {2, 5, 10, 16, 24, 33, 44},
      {3, 12, 29, 57, 99, 157},
      {6, 28, 84, 192, 382},
      {11, 66, 231, 615},
      {23, 157, 634},
      {46, 373},
      {98},
  };
  return g;
}

const std::vector<std::int64_t>& riordan_column_sums() {
  static const std::vector<std::int64_t> v{1, 2, 5, 12, 33, 90, 261, 766, 2312};
  return v;
}

const std::vector<std::int64_t>& unlabeled_sequence() {
  static const std::vector<std::int64_t> v{1, 1, 2, 5, 12, 33, 90, 261, 766, 2312};
  return v;
}

const std::vector<Coeffs>& ultrametric_polynomials() {
  static const std::vector<Coeffs> p{
      {1},
      {0, 1},
      {0, -2, 3},
      {0, 6, -20, 15},
      {0, -24, 130, -210, 105},
      {0, 120, -924, 2380, -2520, 945},
      {0, -720, 7308, -26432, 44100, -34650, 10395},
  };
  return p;
}

const std::vector<Coeffs>& multipartite_unlabeled_polynomials() {
  static const std::vector<Coeffs> p{
      {1},
      {0, 1},
      {0, 0, 1},
      {0, 1, -2, 2},
      {0, 0, 2, -4, 3},
      {0, 1, -4, 10, -12, 6},
      {0, 0, 3, -13, 27, -27, 11},
      {0, 3, -15, 42, -79, 99, -72, 23},
  };
  return p;
}

}  // namespace seriesforge::reference
