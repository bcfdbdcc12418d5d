// Annotates one sentence with an in-memory knowledge base and prints each
// mention with its type and normalized identifier.

#include <iostream>
#include <sstream>

#include "varlex/varlex.hpp"

int main(int argc, char** argv) {
  std::string sentence =
      "The BRAFV600E mutation (c.1799T>A) was frequent. In TRPV4, P799 was seen with P799L.";
  if (argc > 1) sentence = argv[1];

  std::istringstream rows(
      "rsid\tca_id\tgene\tdna_hgvs\tprotein_hgvs\tref\talt\n"
      "rs113488022\tCA123643\tBRAF\tc.1799T>A\tp.V600E\tT\tA\n"
      "rs121912637\t\tTRPV4\t\tp.P799L\t\t\n");
  varlex::Pipeline pipeline(varlex::KnowledgeBase::parse(rows), varlex::GeneLexicon{"BRAF", "TRPV4"});

  const auto result = pipeline.annotate(varlex::Document{"s1", "", sentence, {}});
  for (const auto& a : result.document.annotations)
    std::cout << a.start << '\t' << a.end << '\t' << a.text << '\t' << a.type_label << '\t'
              << a.norm_id.value_or("-") << '\n';
}
