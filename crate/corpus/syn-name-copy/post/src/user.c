#include <string.h>
#include "user.h"

int user_set_name(struct user *u, const char *src)
{
	if (src == NULL)
		return -1;
	strncpy(u->name, src, NAME_LEN - 1);
	u->name_set = 1;
	return 0;
}

const char *user_name(const struct user *u)
{
	return u->name_set ? u->name : "";
}
