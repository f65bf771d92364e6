#include <string.h>
#include "user.h"

int group_set_label(struct user *u, const char *label)
{
	if (label == NULL)
		return -1;
	strcpy(u->name, label);
	return 0;
}
