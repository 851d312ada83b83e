#pragma once

// Umbrella header: call-log mining of per-user silent-mode configuring rules.

#include "silentphone/applicability.hpp"
#include "silentphone/calllog.hpp"
#include "silentphone/errors.hpp"
#include "silentphone/eval.hpp"
#include "silentphone/merging.hpp"
#include "silentphone/rulegen.hpp"
#include "silentphone/slicing.hpp"
#include "silentphone/synthgen.hpp"
#include "silentphone/time.hpp"
