// Copyright 2026 the adz authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace adz {
inline constexpr const char* version_string = "0.1.0";
}
