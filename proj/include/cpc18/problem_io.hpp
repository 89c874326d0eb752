#pragma once

#include <string>
#include <vector>

#include "cpc18/option.hpp"

namespace cpc18 {

// Problem CSV, header:
//   id,LA,HA,pHA,LotNumA,LotShapeA,LB,HB,pHB,LotNumB,LotShapeB,Amb,Corr
void write_problems_csv(const std::string& path, const std::vector<ChoiceProblem>& problems);
std::vector<ChoiceProblem> read_problems_csv(const std::string& path);

std::vector<std::string> problem_csv_header();
std::vector<std::string> problem_csv_fields(const ChoiceProblem& p);

}  // namespace cpc18
