#include "hurwitz/insulin.hpp"

#include "hurwitz/json_io.hpp"

namespace hurwitz {

namespace detail {
extern const std::string_view kInsulinA7Json;
}

std::string_view insulin_a7_json() { return detail::kInsulinA7Json; }

const Matrix& insulin_a7() {
    static const Matrix a7 = matrix_from_json(Json::parse(insulin_a7_json()));
    return a7;
}

const Matrix& insulin_b6() {
    static const Matrix b6 = schur_reduce(partition(insulin_a7()), Tolerance::exact());
    return b6;
}

}  // namespace hurwitz
