#include "pp3/fault.hpp"

namespace pp3::fault {

namespace {
Site g_active = Site::none;
}

void inject(Site s)
{
    g_active = s;
}

Site active()
{
    return g_active;
}

int sign(Site s)
{
    return s == g_active ? -1 : 1;
}

}  // namespace pp3::fault
