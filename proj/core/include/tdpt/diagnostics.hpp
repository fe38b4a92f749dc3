#pragma once

#include <functional>
#include <string_view>

namespace tdpt {

using WarningSink = std::function<void(std::string_view)>;

// Warnings go to std::clog unless a sink is installed. The sink is global and
// must be set before worker threads start.
void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace tdpt
