#include "schubitope.h"

#include <string>

#include "schubitope/ops.hpp"
#include "schubitope/types.hpp"

struct stp_result {
    stp_status status = STP_OK;
    std::string json;
    std::string error;
};

namespace {

template <typename Fn>
stp_result* run(Fn fn) {
    auto* result = new stp_result();
    try {
        result->json = fn().dump();
    } catch (const schub::input_error& e) {
        result->status = STP_BAD_INPUT;
        result->error = e.what();
    } catch (const schub::invariant_fault& e) {
        result->status = STP_INTERNAL;
        result->error = e.what();
    } catch (const std::exception& e) {
        result->status = STP_INTERNAL;
        result->error = e.what();
    }
    return result;
}

std::string text(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

stp_status stp_result_status(const stp_result* result) { return result->status; }
const char* stp_result_json(const stp_result* result) { return result->json.c_str(); }
const char* stp_result_error(const stp_result* result) { return result->error.c_str(); }
void stp_result_free(stp_result* result) { delete result; }

const char* stp_version(void) { return "1.0.0"; }

stp_result* stp_diagram(const char* kind, const char* input, int n) {
    return run([&] { return schub::ops::diagram(text(kind), text(input), n); });
}

stp_result* stp_theta(const char* diagram, int n, const char* rows) {
    return run([&] { return schub::ops::theta(text(diagram), n, text(rows)); });
}

stp_result* stp_points(const char* diagram, int n, int t) {
    return run([&] { return schub::ops::points(text(diagram), n, t); });
}

stp_result* stp_lattice_free(const char* kind, const char* input, int n) {
    return run([&] { return schub::ops::lattice_free(text(kind), text(input), n); });
}

stp_result* stp_ehrhart(const char* kind, const char* input, int n) {
    return run([&] { return schub::ops::ehrhart(text(kind), text(input), n); });
}

stp_result* stp_poly(const char* family, const char* input) {
    return run([&] { return schub::ops::poly(text(family), text(input)); });
}

stp_result* stp_newton(const char* family, const char* input) {
    return run([&] { return schub::ops::newton(text(family), text(input)); });
}

stp_result* stp_verify(const char* suite, const char* options_json) {
    auto* result = run([&] {
        const std::string opts = text(options_json);
        auto options = opts.empty() ? nlohmann::ordered_json::object()
                                    : nlohmann::ordered_json::parse(opts, nullptr, false);
        if (options.is_discarded()) throw schub::input_error("options are not valid JSON");
        return schub::ops::verify(text(suite), options);
    });
    if (result->status == STP_OK) {
        const auto doc = nlohmann::json::parse(result->json);
        if (doc.value("n_failures", 0) > 0) result->status = STP_SUITE_FAIL;
    }
    return result;
}

}  // extern "C"
