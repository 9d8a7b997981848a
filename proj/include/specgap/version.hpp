// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#define SPECGAP_VERSION_MAJOR 0
#define SPECGAP_VERSION_MINOR 1
#define SPECGAP_VERSION_PATCH 0
#define SPECGAP_VERSION_STRING "0.1.0"
