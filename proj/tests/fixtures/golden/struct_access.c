struct node { int value; struct node *next; };
int sum(struct node *head) {
    int total = 0;
    struct node local;
    local.value = 0;
    local.next = head;
    while (head) {
        total += head->value;
        head = head->next;
    }
    return total + local.next->next->value;
}
