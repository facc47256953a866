#pragma once

#include <fstream>
#include <random>
#include <string>

#include "gfw/io.hpp"
#include "gfw/number_field.hpp"

namespace gfw::test {

inline Json load_data(const std::string& name) {
  std::ifstream in(std::string(GFW_TEST_DATA) + "/" + name);
  return Json::parse(in);
}

inline std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

inline Rational random_rational(std::mt19937& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline FieldElem random_elem(const FieldPtr& f, std::mt19937& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.push_back(random_rational(rng));
  return FieldElem(f, std::move(c));
}

}  // namespace gfw::test
