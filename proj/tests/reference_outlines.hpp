// Outline paths of the reference building-block drawings, as drawn.
// Each string is a closed polygon "(x,y)--(x,y)--...".
#pragma once

namespace outlines {

inline constexpr const char* tiny_filler[] = {
    "(0,0)--(0,2)--(2,2)--(2,3)--(0,3)--(0,5)--(-1,5)--(-1,3)--(-3,3)--(-3,2)--(-1,2)--(-1,0)--(0,0)",
};

inline constexpr const char* linker[] = {
    "(0,0)--(0,14)--(3,14)--(3,16)--(1,16)--(1,17)--(3,17)--(3,19)--(4,19)--(4,17)--(6,17)--(6,16)--(4,16)--(4,14)--(38,14)--(38,21)--(42,21)--(42,20)--(39,20)--(39,14)--(45,14)--(45,8)--(42,8)--(42,9)--(44,9)--(44,10)--(42,10)--(42,12)--(41,12)--(41,10)--(39,10)--(39,9)--(41,9)--(41,7)--(38,7)--(38,0)--(11,0)--(11,2)--(13,2)--(13,3)--(11,3)--(11,5)--(10,5)--(10,3)--(8,3)--(8,2)--(10,2)--(10,0)--(0,0)",
    "(39,0)--(39,6)--(42,6)--(42,5)--(40,5)--(40,4)--(42,4)--(42,2)--(43,2)--(43,4)--(45,4)--(45,5)--(43,5)--(43,7)--(46,7)--(46,14)--(73,14)--(73,12)--(71,12)--(71,11)--(73,11)--(73,9)--(74,9)--(74,11)--(76,11)--(76,12)--(74,12)--(74,14)--(84,14)--(84,0)--(81,0)--(81,-2)--(83,-2)--(83,-3)--(81,-3)--(81,-5)--(80,-5)--(80,-3)--(78,-3)--(78,-2)--(80,-2)--(80,0)--(46,0)--(46,-7)--(42,-7)--(42,-6)--(45,-6)--(45,0)--(39,0)",
};

inline constexpr const char* half_south[] = {
    "(39,0)--(39,6)--(42,6)--(42,5)--(40,5)--(40,4)--(42,4)--(42,2)--(43,2)--(43,4)--(45,4)--(45,5)--(43,5)--(43,7)--(42,7)--(42,9)--(44,9)--(44,10)--(42,10)--(42,12)--(41,12)--(41,10)--(39,10)--(39,9)--(41,9)--(41,7)--(38,7)--(38,0)--(25,0)--(25,2)--(27,2)--(27,3)--(25,3)--(25,5)--(24,5)--(24,3)--(22,3)--(22,2)--(24,2)--(24,0)--(11,0)--(11,2)--(13,2)--(13,3)--(11,3)--(11,5)--(10,5)--(10,3)--(8,3)--(8,2)--(10,2)--(10,0)--(0,0)--(0,14)--(84,14)--(84,0)--(81,0)--(46,0)--(46,-7)--(42,-7)--(42,-6)--(45,-6)--(45,0)--(39,0)",
};

inline constexpr const char* blank[] = {
    "(0,0)--(0,14)--(38,14)--(38,21)--(42,21)--(42,20)--(39,20)--(39,14)--(45,14)--(45,8)--(42,8)--(42,9)--(44,9)--(44,10)--(42,10)--(42,12)--(41,12)--(41,10)--(39,10)--(39,9)--(41,9)--(41,7)--(38,7)--(38,0)--(0,0)",
    "(39,0)--(39,6)--(42,6)--(42,5)--(40,5)--(40,4)--(42,4)--(42,2)--(43,2)--(43,4)--(45,4)--(45,5)--(43,5)--(43,7)--(46,7)--(46,14)--(84,14)--(84,0)--(81,0)--(46,0)--(46,-7)--(42,-7)--(42,-6)--(45,-6)--(45,0)--(39,0)",
};

inline constexpr const char* encoding_cf_cn[] = {
    "(0,0)--(0,14)--(10,14)--(10,16)--(8,16)--(8,17)--(10,17)--(10,19)--(11,19)--(11,17)--(13,17)--(13,16)--(11,16)--(11,14)--(38,14)--(38,21)--(41,21)--(41,23)--(39,23)--(39,24)--(41,24)--(41,26)--(42,26)--(42,24)--(44,24)--(44,23)--(42,23)--(42,20)--(39,20)--(39,14)--(45,14)--(45,8)--(42,8)--(42,9)--(44,9)--(44,10)--(42,10)--(42,12)--(41,12)--(41,10)--(39,10)--(39,9)--(41,9)--(41,7)--(38,7)--(38,0)--(4,0)--(4,2)--(6,2)--(6,3)--(4,3)--(4,5)--(3,5)--(3,3)--(1,3)--(1,2)--(3,2)--(3,0)--(0,0)",
    "(39,0)--(39,6)--(42,6)--(42,5)--(40,5)--(40,4)--(42,4)--(42,2)--(43,2)--(43,4)--(45,4)--(45,5)--(43,5)--(43,7)--(46,7)--(46,14)--(80,14)--(80,12)--(78,12)--(78,11)--(80,11)--(80,9)--(81,9)--(81,11)--(83,11)--(83,12)--(81,12)--(81,14)--(84,14)--(84,0)--(74,0)--(74,-2)--(76,-2)--(76,-3)--(74,-3)--(74,-5)--(73,-5)--(73,-3)--(71,-3)--(71,-2)--(73,-2)--(73,0)--(46,0)--(46,-7)--(41,-7)--(41,-5)--(39,-5)--(39,-4)--(41,-4)--(41,-2)--(42,-2)--(42,-4)--(44,-4)--(44,-5)--(42,-5)--(42,-6)--(45,-6)--(45,0)--(39,0)",
};

}  // namespace outlines
