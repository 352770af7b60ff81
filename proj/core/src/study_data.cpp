#include "comfort/study_data.hpp"

#include <string>

namespace comfort {
namespace {

std::vector<std::string> subject_ids() {
    std::vector<std::string> ids;
    for (int i = 1; i <= 11; ++i) ids.push_back("sub" + std::to_string(i));
    return ids;
}

}  // namespace

StudyTable embedded_heart_rate_table() {
    // Columns: PLF, PTF, CLF, CTF.
    return StudyTable(Measure::HeartRate, subject_ids(),
                      {{
                          {67.66, 81.26, 72.28, 94.23, 69.81, 71.77, 92.53, 95.4, 91.42, 80.41, 76.8},
                          {69.18, 79.58, 73.84, 91.97, 70.78, 73.14, 91.42, 94.81, 91.42, 88.27, 77.96},
                          {63.73, 83.93, 72.62, 91.97, 71.77, 74.9, 92.53, 91.7, 91.97, 83.02, 81.7},
                          {68.26, 84.16, 75.29, 88.27, 70.78, 69.5, 90.35, 91.97, 92.53, 77.96, 83.25},
                      }});
}

StudyTable embedded_respiration_table() {
    return StudyTable(Measure::RespirationRate, subject_ids(),
                      {{
                          {15.11, 14.32, 13.33, 14.27, 14.11, 12.26, 10.97, 14.49, 17.61, 14.94, 16.41},
                          {15.05, 13.42, 15.80, 12.26, 15.93, 12.22, 11.63, 12.59, 13.81, 14.11, 15.73},
                          {15.11, 14.54, 14.38, 14.76, 11.36, 11.60, 11.92, 12.54, 16.13, 13.81, 13.61},
                          {13.96, 14.76, 14.06, 12.80, 14.11, 12.84, 13.91, 14.54, 16.99, 13.61, 16.55},
                      }});
}

StudyTable embedded_table(Measure measure) {
    return measure == Measure::HeartRate ? embedded_heart_rate_table() : embedded_respiration_table();
}

}  // namespace comfort
