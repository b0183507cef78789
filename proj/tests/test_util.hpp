#pragma once

#include <string>

#include "fivefold/errors.hpp"

// Runs f and reports the stable fault name it throws ("" if it doesn't).
template <typename F>
std::string fault_name(F&& f) {
    try {
        f();
    } catch (const fivefold::Fault& e) {
        return e.name();
    } catch (...) {
        return "<non-fault exception>";
    }
    return "";
}
