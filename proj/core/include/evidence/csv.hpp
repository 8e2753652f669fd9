#pragma once

#include <concepts>
#include <cstdio>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace evidence {

/// "%.10g" rendering used by every CSV column.
std::string format_real(double v);

/// Minimal CSV emitter: header row, period decimal separator, 10 significant
/// digits for reals. Fields are never quoted; callers only pass plain tokens.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::initializer_list<std::string_view> header);

    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((os_ << (first ? "" : ",") << render(fields), first = false), ...);
        os_ << '\n';
    }

private:
    template <class T>
    static std::string render(const T& v) {
        if constexpr (std::is_floating_point_v<T>) {
            return format_real(static_cast<double>(v));
        } else if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
        } else if constexpr (std::is_integral_v<T>) {
            return std::to_string(v);
        } else {
            return std::string(v);
        }
    }

    std::ostream& os_;
};

}  // namespace evidence
