// Copyright 2026 The CSM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "csm/error.hpp"

#include <string>

#include "gtest/gtest.h"

using namespace csm;

TEST(error, message_carries_kind) {
    const Error e(ErrorKind::NotOrthonormal, "vectors 0 and 1 overlap");
    EXPECT_EQ(e.kind(), ErrorKind::NotOrthonormal);
    EXPECT_EQ(std::string(e.what()), "NotOrthonormal: vectors 0 and 1 overlap");
    EXPECT_EQ(to_string(ErrorKind::BasisNotOrthogonal), "BasisNotOrthogonal");
}
