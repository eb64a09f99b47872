/**
 * Copyright 2026 The qosc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cmath>

#include <qosc/ddouble.hpp>

using qosc::specfun::DDouble;
using qosc::specfun::Scaled;

TEST_CASE("compensated addition keeps bits a double loses") {
    DDouble big(1e16);
    DDouble sum = big + DDouble(1.0);
    DDouble back = sum - big;
    CHECK(back.to_double() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("product error term is captured") {
    double a = 1.0 + std::ldexp(1.0, -30);
    double b = 1.0 - std::ldexp(1.0, -31);
    DDouble p = DDouble(a) * DDouble(b);
    long double exact = static_cast<long double>(a) * static_cast<long double>(b);
    long double got = static_cast<long double>(p.hi) + static_cast<long double>(p.lo);
    CHECK(std::fabs(static_cast<double>(got - exact)) < 1e-32);
}

TEST_CASE("division round trips") {
    DDouble x = DDouble(1.0) / DDouble(3.0);
    DDouble y = x * DDouble(3.0) - DDouble(1.0);
    CHECK(std::fabs(y.to_double()) < 1e-31);
}

TEST_CASE("sqrt is accurate at the compensated level") {
    DDouble r = qosc::specfun::dd_sqrt(DDouble(2.0));
    DDouble err = r * r - DDouble(2.0);
    CHECK(std::fabs(err.to_double()) < 1e-31);
}

TEST_CASE("scaled values survive far outside double range") {
    Scaled x = qosc::specfun::scaled_pow(Scaled(2.0), 4000);
    CHECK(x.e == 4000);
    CHECK(x.m.hi == doctest::Approx(1.0));
    Scaled y = x * x;                           // 2^8000
    Scaled ratio = y / x;                       // back to 2^4000
    CHECK((ratio - x).is_zero());
    CHECK(x.log_abs() == doctest::Approx(4000.0 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("scaled addition aligns exponents") {
    Scaled one(1.0);
    Scaled tiny(std::ldexp(1.0, -80));
    Scaled s = one + tiny;
    Scaled diff = s - one;
    CHECK(diff.to_double() == doctest::Approx(std::ldexp(1.0, -80)).epsilon(1e-20));
    // far below the 106-bit window the small addend is dropped
    Scaled negligible(std::ldexp(1.0, -200));
    CHECK(((one + negligible) - one).is_zero());
}

TEST_CASE("scaled sqrt handles odd exponents") {
    Scaled x(DDouble(3.0), 51);  // 3 * 2^51
    Scaled r = qosc::specfun::scaled_sqrt(x);
    Scaled err = r * r - x;
    CHECK(std::fabs((err / x).to_double()) < 1e-30);
}
