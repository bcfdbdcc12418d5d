#pragma once

#include "varlex/errors.hpp"
#include "varlex/tokenizer.hpp"
#include "varlex/variant.hpp"
#include "varlex/grammar.hpp"
#include "varlex/hgvs.hpp"
#include "varlex/knowledge_base.hpp"
#include "varlex/recognizer.hpp"
#include "varlex/normalizer.hpp"
#include "varlex/union_find.hpp"
#include "varlex/grouper.hpp"
#include "varlex/pubtator.hpp"
#include "varlex/evaluation.hpp"
#include "varlex/pipeline.hpp"
