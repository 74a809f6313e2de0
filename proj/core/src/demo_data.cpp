#include "vickrey/demo.hpp"

namespace vickrey {

namespace {

// Five-bidder demonstration fixture: per-bidder code matrices, the dealt
// bid-share matrices, and the per-round mask shares, exactly as executed.
const RawBidderFixture kBidder1 = {
    // a[i][j]
    {
        {847, 1555, 1944, 1527, 273, 1103, 611, 31},
        {21, 1835, 1604, 499, 208, 1542, 501, 1692},
        {306, 1621, 667, 1471, 827, 1554, 1937, 231},
        {1173, 1405, 207, 699, 156, 112, 1176, 198},
        {889, 1939, 1058, 1003, 135, 1432, 1679, 909},
    },
    // c[i]
    {673, 162, 624, 149, 1349},
    // e[j]
    {1079, 1216, 1810, 536, 413, 795, 1869, 981},
    // bid shares b[i][j]
    {
        {1050, 1613, 457, 1472, 219, 442, 839, 891},
        {1779, 1860, 758, 1694, 535, 779, 1668, 790},
        {1431, 1776, 1919, 555, 1169, 930, 1642, 1407},
        {258, 512, 904, 1466, 246, 1871, 141, 1210},
        {1352, -11800, -11274, -13291, 3342, 703, 1852, 497},
    },
    // mask shares d[j][i]
    {
        {705, 1479, 307, 1292, 1112},
        {1654, 27, 1638, 739, 542},
        {421, 1328, 965, 1399, 249},
        {1043, 462, 1366, 1115, 1911},
        {1771, 1014, 1060, 876, 1474},
        {1149, 1790, 769, 1280, 362},
        {1227, 110, 660, 154, 1633},
        {1957, 1460, 2042, 118, 1282},
    },
};

const RawBidderFixture kBidder2 = {
    // a[i][j]
    {
        {1449, 168, 1354, 861, 1923, 1405, 1731, 1515},
        {114, 1851, 1987, 1260, 1485, 1662, 832, 1871},
        {145, 904, 1162, 1224, 640, 1491, 1568, 1012},
        {1528, 888, 1206, 1740, 1283, 798, 101, 1126},
        {1007, 551, 1205, 1868, 1978, 570, 1893, 943},
    },
    // c[i]
    {182, 1030, 1717, 612, 671},
    // e[j]
    {1270, 1384, 1174, 867, 1078, 833, 1370, 999},
    // bid shares b[i][j]
    {
        {551, 231, 427, 598, 637, 1879, 1570, 1544},
        {221, 1905, 478, 1212, 508, 364, 866, 1801},
        {369, 2, 660, 4, 1607, 790, 920, 1189},
        {320, 1574, 1962, 2, 836, 428, 412, 166},
        {-5605, 3250, 2269, 2113, 1517, 2565, -6990, -11459},
    },
    // mask shares d[j][i]
    {
        {1761, 291, 789, 648, 441},
        {937, 1248, 321, 2054, 1603},
        {1534, 1142, 1065, 2032, 1836},
        {32, 760, 482, 1779, 1008},
        {846, 249, 23, 182, 1616},
        {1628, 1384, 1744, 108, 531},
        {1559, 414, 1870, 1912, 1689},
        {181, 495, 1687, 1333, 179},
    },
};

const RawBidderFixture kBidder3 = {
    // a[i][j]
    {
        {30, 735, 1621, 1696, 1284, 639, 1103, 1031},
        {1989, 1100, 104, 1255, 997, 1609, 1253, 1643},
        {1972, 911, 414, 1738, 759, 1264, 1014, 2019},
        {1720, 1378, 1117, 1517, 1339, 369, 304, 1510},
        {1016, 205, 1536, 674, 1741, 710, 991, 1405},
    },
    // c[i]
    {876, 1623, 113, 68, 535},
    // e[j]
    {1062, 1465, 11, 1444, 1739, 1024, 862, 1708},
    // bid shares b[i][j]
    {
        {1612, 149, 1327, 498, 437, 571, 1797, 1317},
        {1643, 1463, 48, 1352, 1981, 17, 3, 518},
        {375, 607, 1456, 22, 1179, 967, 98, 98},
        {291, 1471, 1862, 125, 1396, 175, 1981, 124},
        {84, 1359, -8458, 5053, -1780, -6256, -11987, 4348},
    },
    // mask shares d[j][i]
    {
        {563, 747, 1321, 1363, 261},
        {1022, 1964, 833, 268, 940},
        {1872, 481, 1320, 1629, 849},
        {992, 1756, 1635, 656, 434},
        {1086, 2034, 1059, 351, 136},
        {123, 449, 1934, 702, 1110},
        {724, 1493, 88, 1058, 965},
        {1364, 78, 1282, 880, 1324},
    },
};

const RawBidderFixture kBidder4 = {
    // a[i][j]
    {
        {1594, 1891, 992, 2026, 1781, 1295, 1008, 1300},
        {1921, 1407, 895, 583, 1926, 70, 290, 827},
        {631, 956, 881, 594, 98, 69, 1961, 1836},
        {1116, 182, 1128, 408, 837, 14, 1380, 757},
        {1607, 1736, 1342, 1951, 1077, 1658, 392, 925},
    },
    // c[i]
    {1098, 1026, 1853, 923, 133},
    // e[j]
    {815, 1417, 1446, 1112, 479, 1202, 95, 187},
    // bid shares b[i][j]
    {
        {1064, 1875, 698, 48, 59, 188, 696, 1334},
        {1349, 135, 1660, 404, 1019, 1600, 1904, 1514},
        {1778, 1909, 1116, 1411, 1286, 64, 1587, 1313},
        {977, 717, 1366, 1641, 487, 1962, 1759, 1977},
        {1598, 44, -9420, 1011, 2337, -1523, -1803, -10657},
    },
    // mask shares d[j][i]
    {
        {1034, 204, 43, 421, 1016},
        {1331, 1951, 433, 794, 304},
        {680, 1202, 710, 979, 84},
        {1593, 2005, 1264, 1854, 357},
        {494, 1940, 219, 177, 1045},
        {1289, 1265, 324, 1168, 1094},
        {637, 374, 1388, 289, 638},
        {1559, 187, 250, 174, 76},
    },
};

const RawBidderFixture kBidder5 = {
    // a[i][j]
    {
        {1950, 1690, 1325, 1994, 250, 283, 1689, 918},
        {99, 769, 1206, 332, 489, 1143, 346, 726},
        {951, 657, 641, 2023, 889, 148, 1628, 1307},
        {1229, 827, 922, 151, 1573, 998, 1182, 928},
        {1174, 331, 1306, 347, 1389, 1210, 819, 1307},
    },
    // c[i]
    {711, 1752, 1497, 2043, 140},
    // e[j]
    {1030, 301, 388, 1776, 781, 12, 181, 1756},
    // bid shares b[i][j]
    {
        {416, 439, 123, 1009, 329, 347, 916, 1558},
        {1282, 355, 585, 1186, 748, 1677, 838, 1966},
        {309, 903, 1112, 1173, 1715, 1505, 286, 631},
        {1976, 1517, 825, 539, 1793, 234, 647, 1927},
        {-9676, 1548, -9092, 1936, -10905, 1817, 3087, -11571},
    },
    // mask shares d[j][i]
    {
        {305, 1372, 960, 235, 1205},
        {1355, 1331, 428, 834, 1092},
        {1700, 130, 2061, 1052, 1608},
        {458, 385, 306, 994, 1604},
        {1947, 931, 860, 13, 94},
        {604, 1621, 1261, 1846, 890},
        {1922, 1277, 1184, 1144, 306},
        {900, 9, 47, 469, 639},
    },
};

}  // namespace

AuctionConfig demo_config() {
  AuctionConfig config;
  config.p = 2063;
  config.g = 5;
  config.n = 5;
  config.k = 8;
  config.bids = {143, 124, 217, 222, 86};
  config.seed = 7;
  config.fixtures = {kBidder1, kBidder2, kBidder3, kBidder4, kBidder5};
  return config;
}

const DemoExpectations& demo_expectations() {
  static const DemoExpectations expect = {
      // key values K_{l,j}
      {
          {823, 1882, 801, 1014, 1204, 295, 2058, 274},
          {790, 766, 361, 28, 274, 88, 1642, 230},
          {757, 624, 1042, 641, 844, 1993, 820, 478},
          {1825, 961, 983, 13, 1490, 346, 915, 1213},
          {821, 170, 1185, 959, 484, 1604, 1330, 67},
      },
      // fake keys F_{l,j}
      {
          {641, 1994, 75, 1519, 33, 1436, 443, 1735},
          {1174, 1285, 1501, 1927, 1875, 1612, 862, 774},
          {1800, 823, 1786, 1757, 336, 717, 502, 1645},
          {1418, 1194, 323, 13, 24, 946, 275, 117},
          {1063, 1689, 1549, 1605, 1543, 268, 1646, 1097},
      },
      // check keys C_{l,j}
      {
          {849, 704, 251, 1171, 1914, 1206, 1741, 412},
          {1563, 946, 1343, 858, 1835, 1987, 1533, 862},
          {664, 1835, 601, 1597, 349, 454, 1421, 832},
          {1969, 1029, 1330, 1580, 900, 1618, 88, 806},
          {2058, 104, 99, 1869, 614, 650, 1825, 1274},
      },
      // published bid commitments
      {681, 528, 718, 32, 9},
      // per-round B_j
      {1621, 768, 1394, 1674, 454, 346, 915, 1843},
      // per-round P_j
      {675, 888, 534, 163, 2025, 820, 1070, 567},
      // per-round D_j; the j=2 slot carries no reference value and is
      // left unchecked (zero)
      {1407, 0, 1211, 1772, 599, 305, 592, 725},
      // output digits
      {1, 1, 0, 1, 1, 0, 0, 1},
      // price
      217,
      // price-check vector
      {1301, 705, 718, 511, 150},
      // matching slot
      3,
      // winner
      4,
      // winner digit j'
      7,
      // B_{j'}
      915,
  };
  return expect;
}

}  // namespace vickrey
