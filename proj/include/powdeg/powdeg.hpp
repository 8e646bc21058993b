#pragma once

#include "powdeg/bigint.hpp"
#include "powdeg/classify.hpp"
#include "powdeg/degree.hpp"
#include "powdeg/errors.hpp"
#include "powdeg/group.hpp"
#include "powdeg/io.hpp"
#include "powdeg/number_theory.hpp"
#include "powdeg/oracle.hpp"
