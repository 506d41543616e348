#include "theta/constructor.hpp"

#include <algorithm>

namespace theta {

namespace {

// Verbatim certificate labelings for the cases the closed-form recipes
// do not reach. Checksums guard against fixture drift.
std::vector<ExceptionTable> build_tables() {
    std::vector<ExceptionTable> t;
    t.push_back({
        "case2a_l2",
        {2, 6, 6, 6, 6, 6},
        {
            {22, 11},
            {1, 32, 12, 21, 23, 10},
            {3, 30, 14, 19, 25, 8},
            {4, 29, 15, 18, 26, 7},
            {5, 28, 16, 17, 27, 6},
            {9, 24, 20, 13, 31, 2},
        },
        5791473087027945709ULL,
    });
    t.push_back({
        "case2b_s5",
        {2, 4, 4, 4, 6},
        {
            {15, 6},
            {3, 18, 12, 9},
            {4, 17, 13, 8},
            {7, 14, 16, 5},
            {1, 20, 10, 11, 19, 2},
        },
        10061442088449932230ULL,
    });
    t.push_back({
        "case2b_s8",
        {4, 8, 8, 8, 8, 8, 10, 10},
        {
            {40, 25, 55, 10},
            {5, 60, 20, 45, 35, 30, 50, 15},
            {6, 59, 21, 44, 36, 29, 51, 14},
            {7, 58, 22, 43, 37, 28, 52, 13},
            {8, 57, 23, 42, 38, 27, 53, 12},
            {11, 54, 26, 39, 41, 24, 56, 9},
            {1, 64, 16, 49, 31, 34, 46, 19, 61, 4},
            {2, 63, 17, 48, 32, 33, 47, 18, 62, 3},
        },
        9892030662444407103ULL,
    });
    t.push_back({
        "case2b_s11",
        {6, 12, 12, 12, 12, 12, 12, 12, 14, 14, 14},
        {
            {77, 56, 98, 35, 119, 14},
            {7, 126, 28, 105, 49, 84, 70, 63, 91, 42, 112, 21},
            {8, 125, 29, 104, 50, 83, 71, 62, 92, 41, 113, 20},
            {9, 124, 30, 103, 51, 82, 72, 61, 93, 40, 114, 19},
            {10, 123, 31, 102, 52, 81, 73, 60, 94, 39, 115, 18},
            {11, 122, 32, 101, 53, 80, 74, 59, 95, 38, 116, 17},
            {12, 121, 33, 100, 54, 79, 75, 58, 96, 37, 117, 16},
            {13, 120, 34, 99, 55, 78, 76, 57, 97, 36, 118, 15},
            {1, 132, 22, 111, 43, 90, 64, 69, 85, 48, 106, 27, 127, 6},
            {2, 131, 23, 110, 44, 89, 65, 68, 86, 47, 107, 26, 128, 5},
            {4, 129, 25, 108, 46, 87, 67, 66, 88, 45, 109, 24, 130, 3},
        },
        12941253986022606414ULL,
    });
    t.push_back({
        "case3a_l6_t7",
        {8, 14, 20, 20, 20, 20, 20, 20, 22, 22, 22, 22},
        {
            {10, 221, 32, 199, 54, 177, 76, 155},
            {98, 133, 120, 111, 142, 89, 164, 67, 186, 45, 208, 23, 230, 1},
            {22, 209, 44, 187, 66, 165, 88, 143, 110, 121, 132, 99, 154, 77, 176, 55, 198, 33, 220, 11},
            {21, 210, 43, 188, 65, 166, 87, 144, 109, 122, 131, 100, 153, 78, 175, 56, 197, 34, 219, 12},
            {20, 211, 42, 189, 64, 167, 86, 145, 108, 123, 130, 101, 152, 79, 174, 57, 196, 35, 218, 13},
            {19, 212, 41, 190, 63, 168, 85, 146, 107, 124, 129, 102, 151, 80, 173, 58, 195, 36, 217, 14},
            {18, 213, 40, 191, 62, 169, 84, 147, 106, 125, 128, 103, 150, 81, 172, 59, 194, 37, 216, 15},
            {16, 215, 38, 193, 60, 171, 82, 149, 104, 127, 126, 105, 148, 83, 170, 61, 192, 39, 214, 17},
            {5, 226, 27, 204, 49, 182, 71, 160, 93, 138, 115, 116, 137, 94, 159, 72, 181, 50, 203, 28, 225, 6},
            {7, 224, 29, 202, 51, 180, 73, 158, 95, 136, 117, 114, 139, 92, 161, 70, 183, 48, 205, 26, 227, 4},
            {8, 223, 30, 201, 52, 179, 74, 157, 96, 135, 118, 113, 140, 91, 162, 69, 184, 47, 206, 25, 228, 3},
            {9, 222, 31, 200, 53, 178, 75, 156, 97, 134, 119, 112, 141, 90, 163, 68, 185, 46, 207, 24, 229, 2},
        },
        2637204353580712260ULL,
    });
    t.push_back({
        "case3b_l2_t2",
        {2, 2, 4, 6},
        {
            {4, 11},
            {10, 5},
            {6, 9, 12, 3},
            {1, 14, 7, 8, 13, 2},
        },
        10559736626276002194ULL,
    });
    t.push_back({
        "case3b_l3_t3",
        {4, 4, 8, 8, 10, 10},
        {
            {8, 37, 18, 27},
            {28, 17, 38, 7},
            {6, 39, 16, 29, 26, 19, 36, 9},
            {10, 35, 20, 25, 30, 15, 40, 5},
            {1, 44, 11, 34, 21, 24, 31, 14, 41, 4},
            {2, 43, 12, 33, 22, 23, 32, 13, 42, 3},
        },
        2713489030434487781ULL,
    });
    t.push_back({
        "case4_s5_t2",
        {4, 6, 10, 14, 14},
        {
            {39, 10, 46, 3},
            {7, 42, 14, 35, 21, 28},
            {4, 45, 11, 38, 18, 31, 25, 24, 32, 17},
            {1, 48, 8, 41, 15, 34, 22, 27, 29, 20, 36, 13, 43, 6},
            {5, 44, 12, 37, 19, 30, 26, 23, 33, 16, 40, 9, 47, 2},
        },
        17937542553264078798ULL,
    });
    t.push_back({
        "case4_s7_t3",
        {6, 10, 16, 22, 22, 22, 22},
        {
            {4, 117, 15, 106, 26, 95},
            {66, 55, 77, 44, 88, 33, 99, 22, 110, 11},
            {37, 84, 48, 73, 59, 62, 70, 51, 81, 40, 92, 29, 103, 18, 114, 7},
            {2, 119, 13, 108, 24, 97, 35, 86, 46, 75, 57, 64, 68, 53, 79, 42, 90, 31, 101, 20, 112, 9},
            {5, 116, 16, 105, 27, 94, 38, 83, 49, 72, 60, 61, 71, 50, 82, 39, 93, 28, 104, 17, 115, 6},
            {8, 113, 19, 102, 30, 91, 41, 80, 52, 69, 63, 58, 74, 47, 85, 36, 96, 25, 107, 14, 118, 3},
            {10, 111, 21, 100, 32, 89, 43, 78, 54, 67, 65, 56, 76, 45, 87, 34, 98, 23, 109, 12, 120, 1},
        },
        14292358678731597270ULL,
    });
    return t;
}
} // namespace

const std::vector<ExceptionTable>& exception_tables() {
    static const std::vector<ExceptionTable> tables = build_tables();
    return tables;
}

const ExceptionTable* find_exception_table(const std::string& id) {
    for (const auto& t : exception_tables())
        if (t.id == id) return &t;
    return nullptr;
}

unsigned long long table_checksum(const std::vector<std::vector<Label>>& rows) {
    unsigned long long h = 0xcbf29ce484222325ULL;
    auto mix = [&h](unsigned long long x) {
        for (int i = 0; i < 8; ++i) {
            h ^= x & 0xFFULL;
            h *= 0x100000001b3ULL;
            x >>= 8;
        }
    };
    for (const auto& row : rows) {
        for (Label v : row) mix(static_cast<unsigned long long>(v));
        h ^= 0xFFULL;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace theta
